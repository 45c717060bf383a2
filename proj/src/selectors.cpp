#include "elco/selectors.hpp"

#include <fstream>
#include <sstream>

namespace elco {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) raise(Errc::parse_error, "bad integer: " + s);
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    raise(Errc::parse_error, "bad integer: " + s);
  }
}

// Field structure on the alphabet, when q is a supported prime power.
std::optional<gf::FieldSpec> field_for(int q, const gf::ModulusTable* moduli) {
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int k = 0;
    int n = q;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (n != 1) return std::nullopt;  // not a prime power
    try {
      return gf::field_make(p, k, moduli);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

Selection parse_selector(const std::string& text, std::uint64_t bound,
                         const gf::ModulusTable* moduli) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    raise(Errc::parse_error, "selector needs the form kind:args — got " + text);
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);

  Selection sel;
  sel.selector = text;

  if (kind == "perm") {
    const auto parts = split(args, ',');
    if (parts.size() != 3) raise(Errc::parse_error, "perm selector needs T,q,l");
    families::PermSel which;
    if (parts[0] == "A")
      which = families::PermSel::alternating;
    else if (parts[0] == "S")
      which = families::PermSel::symmetric;
    else if (parts[0] == "odd")
      which = families::PermSel::odd_coset;
    else
      raise(Errc::parse_error, "perm selector T must be A, S or odd");
    const int q = parse_int(parts[1]), l = parse_int(parts[2]);
    sel.code = families::perm_code(q, l, which, bound);
    sel.field = field_for(q, moduli);
  } else if (kind == "rep") {
    const auto parts = split(args, ',');
    if (parts.size() != 2) raise(Errc::parse_error, "rep selector needs q,m");
    sel.code = families::repetition_code(parse_int(parts[0]), parse_int(parts[1]));
    sel.field = field_for(parse_int(parts[0]), moduli);
  } else if (kind == "rm" || kind == "rmtop") {
    const auto parts = split(args, ',');
    if (parts.size() != 2) raise(Errc::parse_error, "rm selector needs q,d");
    const int q = parse_int(parts[0]), d = parse_int(parts[1]);
    const auto field = field_for(q, moduli);
    if (!field) raise(Errc::unsupported_order, "rm selector needs a field order q");
    sel.rm = families::rm_codes(*field, d, bound);
    sel.code = kind == "rm" ? sel.rm->sub : sel.rm->top;
    sel.field = field;
  } else if (kind == "file") {
    std::ifstream in(args);
    if (!in) raise(Errc::io_error, "cannot open code file: " + args);
    sel.code = read_code(in);
    sel.field = field_for(sel.code.q(), moduli);
  } else {
    raise(Errc::parse_error, "unknown selector kind: " + kind);
  }
  return sel;
}

}  // namespace elco
