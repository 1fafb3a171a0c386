#include "submod/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "submod/errors.hpp"
#include "submod/numtheory.hpp"

namespace submod {

namespace {

GroupTable from_rows(std::vector<std::vector<int>> rows, std::string label) {
  return GroupTable::from_table(rows, std::move(label));
}

GroupTable build_cyclic(int n, const std::string& label) {
  if (n < 1) throw BadParameters("cyclic group needs order >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return from_rows(std::move(rows), label);
}

GroupTable build_elementary_abelian(int p, int k, const std::string& label) {
  if (!is_prime(p) || k < 1) throw BadParameters("elementary abelian group needs prime p, k >= 1");
  int n = 1;
  for (int i = 0; i < k; ++i) {
    if (n > 4096 / p) throw UnsupportedSize("elementary abelian group too large");
    n *= p;
  }
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int x = i, y = j, out = 0, place = 1;
      for (int t = 0; t < k; ++t) {
        out += ((x + y) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      rows[i][j] = out;
    }
  return from_rows(std::move(rows), label);
}

GroupTable build_dihedral(int order, const std::string& label) {
  if (order < 2 || order % 2 != 0) throw BadParameters("dihedral group needs even order >= 2");
  const int n = order / 2;
  auto idx = [&](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int f1 = 0; f1 < 2; ++f1)
    for (int r1 = 0; r1 < n; ++r1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int r2 = 0; r2 < n; ++r2) {
          // (s^f1 r^r1)(s^f2 r^r2) = s^(f1+f2) r^(r2 + (-1)^f2 r1)
          int rot = f2 ? r2 - r1 : r2 + r1;
          rows[idx(f1, r1)][idx(f2, r2)] = idx((f1 + f2) % 2, rot);
        }
  return from_rows(std::move(rows), label);
}

GroupTable build_dicyclic(int order, const std::string& label) {
  if (order < 4 || order % 4 != 0) throw BadParameters("dicyclic group needs order divisible by 4");
  const int m = order / 2;  // a has order 2n = m, b^2 = a^n
  const int half = m / 2;
  auto idx = [&](int bpow, int apow) { return bpow * m + ((apow % m) + m) % m; };
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int b1 = 0; b1 < 2; ++b1)
    for (int a1 = 0; a1 < m; ++a1)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int a2 = 0; a2 < m; ++a2) {
          // b a^i = a^-i b and b^2 = a^half, so
          // (a^a1 b^b1)(a^a2 b^b2) = a^(a1 -/+ a2) b^(b1+b2)
          int apow = b1 ? a1 - a2 : a1 + a2;
          int bpow = b1 + b2;
          if (bpow == 2) {
            bpow = 0;
            apow += half;
          }
          rows[idx(b1, a1)][idx(b2, a2)] = idx(bpow, apow);
        }
  return from_rows(std::move(rows), label);
}

std::vector<std::vector<int>> all_permutations(int d) {
  std::vector<int> base(d);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return out;  // already lexicographically sorted
}

int permutation_parity(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2;
}

GroupTable table_from_perms(std::vector<std::vector<int>> perms, const std::string& label) {
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<int>, int> idx;
  for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<int>(i);
  const int n = static_cast<int>(perms.size());
  const int d = static_cast<int>(perms[0].size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  std::vector<int> comp(d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < d; ++x) comp[x] = perms[i][perms[j][x]];  // (pq)(x) = p(q(x))
      auto it = idx.find(comp);
      if (it == idx.end()) throw BadParameters("permutation set is not closed");
      rows[i][j] = it->second;
    }
  return from_rows(std::move(rows), label);
}

GroupTable build_symmetric(int deg, const std::string& label) {
  if (deg < 1 || deg > 5) throw UnsupportedSize("symmetric group supported for degree 1..5");
  return table_from_perms(all_permutations(deg), label);
}

GroupTable build_alternating(int deg, const std::string& label) {
  if (deg < 1 || deg > 5) throw UnsupportedSize("alternating group supported for degree 1..5");
  std::vector<std::vector<int>> evens;
  for (auto& p : all_permutations(deg))
    if (permutation_parity(p) == 0) evens.push_back(p);
  return table_from_perms(std::move(evens), label);
}

GroupTable build_semidirect_cyclic(int m, int n, int k, const std::string& label) {
  if (m < 1 || n < 1 || k < 0 || k >= m)
    throw BadParameters("semidirect product needs m,n >= 1 and 0 <= k < m");
  if (std::gcd(k, m) != 1)
    throw BadParameters("action parameter k must be a unit modulo m");
  long long kn = 1;
  for (int i = 0; i < n; ++i) kn = (kn * k) % m;
  if (kn % m != 1 % m)
    throw BadParameters("k^n must be 1 modulo m for the action to have order dividing n");
  // powers of k mod m, indexed by the C_n coordinate
  std::vector<int> kp(n);
  kp[0] = 1 % m;
  for (int i = 1; i < n; ++i) kp[i] = static_cast<int>((static_cast<long long>(kp[i - 1]) * k) % m);
  auto idx = [&](int x, int y) { return x * n + y; };
  std::vector<std::vector<int>> rows(m * n, std::vector<int>(m * n));
  for (int x1 = 0; x1 < m; ++x1)
    for (int y1 = 0; y1 < n; ++y1)
      for (int x2 = 0; x2 < m; ++x2)
        for (int y2 = 0; y2 < n; ++y2) {
          int x = static_cast<int>((x1 + static_cast<long long>(kp[y1]) * x2) % m);
          int y = (y1 + y2) % n;
          rows[idx(x1, y1)][idx(x2, y2)] = idx(x, y);
        }
  return from_rows(std::move(rows), label);
}

GroupTable build_product(const std::vector<BuilderSpec>& factors, const std::string& label) {
  if (factors.empty()) throw BadParameters("direct product needs at least one factor");
  GroupTable acc = build_group(factors[0]);
  for (std::size_t f = 1; f < factors.size(); ++f) {
    GroupTable b = build_group(factors[f]);
    const int na = acc.order(), nb = b.order();
    if (na > 4096 / nb) throw UnsupportedSize("direct product too large");
    std::vector<std::vector<int>> rows(na * nb, std::vector<int>(na * nb));
    for (int a1 = 0; a1 < na; ++a1)
      for (int b1 = 0; b1 < nb; ++b1)
        for (int a2 = 0; a2 < na; ++a2)
          for (int b2 = 0; b2 < nb; ++b2)
            rows[a1 * nb + b1][a2 * nb + b2] = acc.mul(a1, a2) * nb + b.mul(b1, b2);
    acc = from_rows(std::move(rows), label);
  }
  acc.set_label(label);
  return acc;
}

}  // namespace

std::string BuilderSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "C" + std::to_string(a);
    case Kind::ElementaryAbelian:
      return "EA(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::Dihedral: return "D" + std::to_string(a);
    case Kind::Dicyclic: return "Dic" + std::to_string(a);
    case Kind::Symmetric: return "S" + std::to_string(a);
    case Kind::Alternating: return "A" + std::to_string(a);
    case Kind::SemidirectCyclic:
      return "SDP(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    case Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i].to_string();
      }
      return s;
    }
    case Kind::FromFile: return "file(" + path + ")";
  }
  return "?";
}

GroupTable build_group(const BuilderSpec& spec) {
  const std::string label = spec.to_string();
  switch (spec.kind) {
    case BuilderSpec::Kind::Cyclic: return build_cyclic(spec.a, label);
    case BuilderSpec::Kind::ElementaryAbelian:
      return build_elementary_abelian(spec.a, spec.b, label);
    case BuilderSpec::Kind::Dihedral: return build_dihedral(spec.a, label);
    case BuilderSpec::Kind::Dicyclic: return build_dicyclic(spec.a, label);
    case BuilderSpec::Kind::Symmetric: return build_symmetric(spec.a, label);
    case BuilderSpec::Kind::Alternating: return build_alternating(spec.a, label);
    case BuilderSpec::Kind::SemidirectCyclic:
      return build_semidirect_cyclic(spec.a, spec.b, spec.c, label);
    case BuilderSpec::Kind::Product: return build_product(spec.factors, label);
    case BuilderSpec::Kind::FromFile: return parse_group_file(spec.path);
  }
  throw BadParameters("unknown builder kind");
}

std::vector<CatalogEntry> default_catalog() {
  using BS = BuilderSpec;
  std::vector<CatalogEntry> out;
  auto add = [&](std::string label, BuilderSpec spec) {
    out.push_back({std::move(label), std::move(spec)});
  };
  for (int n = 1; n <= 32; ++n) add("C" + std::to_string(n), BS::cyclic(n));
  // elementary abelian p^k <= 32, k >= 2 (p^1 duplicates the cyclic list)
  add("EA(2,2)", BS::elementary_abelian(2, 2));
  add("EA(2,3)", BS::elementary_abelian(2, 3));
  add("EA(2,4)", BS::elementary_abelian(2, 4));
  add("EA(2,5)", BS::elementary_abelian(2, 5));
  add("EA(3,2)", BS::elementary_abelian(3, 2));
  add("EA(3,3)", BS::elementary_abelian(3, 3));
  add("EA(5,2)", BS::elementary_abelian(5, 2));
  for (int o = 6; o <= 24; o += 2) add("D" + std::to_string(o), BS::dihedral(o));
  add("Dic8", BS::dicyclic(8));
  add("Dic12", BS::dicyclic(12));
  add("Dic16", BS::dicyclic(16));
  add("S3", BS::symmetric(3));
  add("S4", BS::symmetric(4));
  add("S5", BS::symmetric(5));
  add("A4", BS::alternating(4));
  add("A5", BS::alternating(5));
  add("C3:C4", BS::semidirect_cyclic(3, 4, 2));   // faithful C4-action, order 12
  add("F5", BS::semidirect_cyclic(5, 4, 2));      // Frobenius group of order 20
  add("C5:C2", BS::semidirect_cyclic(5, 2, 4));   // inversion action, order 10
  add("C7:C3", BS::semidirect_cyclic(7, 3, 2));   // order 21
  add("C7:C6", BS::semidirect_cyclic(7, 6, 3));   // full holomorph of C7, order 42
  add("C9:C3", BS::semidirect_cyclic(9, 3, 4));   // nonabelian order 27, exponent 9
  auto prod = [](std::vector<BuilderSpec> fs) { return BS::product(std::move(fs)); };
  add("S3 x C2", prod({BS::symmetric(3), BS::cyclic(2)}));
  add("S3 x C3", prod({BS::symmetric(3), BS::cyclic(3)}));
  add("S3 x C4", prod({BS::symmetric(3), BS::cyclic(4)}));
  add("S3 x S3", prod({BS::symmetric(3), BS::symmetric(3)}));
  add("A4 x C2", prod({BS::alternating(4), BS::cyclic(2)}));
  add("A4 x C3", prod({BS::alternating(4), BS::cyclic(3)}));
  add("D8 x C2", prod({BS::dihedral(8), BS::cyclic(2)}));
  add("Dic8 x C2", prod({BS::dicyclic(8), BS::cyclic(2)}));
  add("D10 x C3", prod({BS::dihedral(10), BS::cyclic(3)}));
  add("F5 x C2", prod({BS::semidirect_cyclic(5, 4, 2), BS::cyclic(2)}));
  add("F5 x C3", prod({BS::semidirect_cyclic(5, 4, 2), BS::cyclic(3)}));
  add("C7:C3 x C2", prod({BS::semidirect_cyclic(7, 3, 2), BS::cyclic(2)}));
  add("C3:C4 x C5", prod({BS::semidirect_cyclic(3, 4, 2), BS::cyclic(5)}));
  add("S4 x C2", prod({BS::symmetric(4), BS::cyclic(2)}));
  add("A5 x C2", prod({BS::alternating(5), BS::cyclic(2)}));
  return out;
}

// --- file formats ---

namespace {

// reads an optional "label ..." line followed by the "<keyword> <n>" line
std::string read_header(std::istream& in, const std::string& keyword, int& value,
                        const std::string& origin, int& lineno) {
  std::string label, line;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;  // blank
    if (word == "label") {
      std::getline(ls >> std::ws, label);
      continue;
    }
    if (word != keyword)
      throw ParseError(lineno, origin + ": expected '" + keyword + "', got '" + word + "'");
    if (!(ls >> value) || value < 1)
      throw ParseError(lineno, origin + ": bad " + keyword + " value");
    return label;
  }
  throw ParseError(lineno, origin + ": missing '" + keyword + "' header");
}

}  // namespace

GroupTable parse_cayley(std::istream& in, const std::string& origin) {
  int n = 0, lineno = 0;
  std::string label = read_header(in, "order", n, origin, lineno);
  if (label.empty()) label = origin;
  std::vector<std::vector<int>> rows;
  std::string line;
  while (static_cast<int>(rows.size()) < n && std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<int> row;
    int x;
    while (ls >> x) row.push_back(x);
    if (row.empty()) continue;
    if (static_cast<int>(row.size()) != n)
      throw ParseError(lineno, origin + ": row has " + std::to_string(row.size()) +
                                   " entries, expected " + std::to_string(n));
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != n)
    throw ParseError(lineno, origin + ": expected " + std::to_string(n) + " rows");
  return GroupTable::from_table(rows, label);
}

GroupTable parse_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_cayley(in, path);
}

void write_cayley(const GroupTable& g, std::ostream& out) {
  if (!g.label().empty()) out << "label " << g.label() << "\n";
  out << "order " << g.order() << "\n";
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (b) out << ' ';
      out << g.mul(a, b);
    }
    out << "\n";
  }
}

GroupTable parse_perm(std::istream& in, const std::string& origin) {
  constexpr std::size_t kClosureCap = 5000;
  int d = 0, lineno = 0;
  std::string label = read_header(in, "degree", d, origin, lineno);
  if (label.empty()) label = origin;
  std::vector<std::vector<int>> gens;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<int> p;
    int x;
    while (ls >> x) p.push_back(x);
    if (p.empty()) continue;
    if (static_cast<int>(p.size()) != d)
      throw ParseError(lineno, origin + ": generator needs " + std::to_string(d) + " images");
    std::vector<char> hit(d, 0);
    for (int img : p) {
      if (img < 0 || img >= d || hit[img])
        throw ParseError(lineno, origin + ": line is not a permutation of 0.." +
                                     std::to_string(d - 1));
      hit[img] = 1;
    }
    gens.push_back(std::move(p));
  }
  std::vector<int> ident(d);
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<std::vector<int>> elems{ident};
  std::map<std::vector<int>, int> seen{{ident, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : gens) {
      std::vector<int> p(d);
      for (int x = 0; x < d; ++x) p[x] = elems[i][s[x]];
      if (seen.emplace(p, static_cast<int>(elems.size())).second) {
        elems.push_back(p);
        if (elems.size() > kClosureCap)
          throw ClosureBudgetExceeded(origin + ": generated permutation group exceeds " +
                                      std::to_string(kClosureCap) + " elements");
      }
    }
  return table_from_perms(std::move(elems), label);
}

GroupTable parse_perm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_perm(in, path);
}

GroupTable parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::string head;
  std::getline(in, head);
  std::istringstream hs(head);
  std::string first, second;
  hs >> first;
  if (first == "label") {
    std::getline(in, head);
    std::istringstream hs2(head);
    hs2 >> second;
  } else {
    second = first;
  }
  in.clear();
  in.seekg(0);
  if (second == "order") return parse_cayley(in, path);
  if (second == "degree") return parse_perm(in, path);
  throw ParseError(1, path + ": expected an 'order' or 'degree' header");
}

// --- manifests ---

namespace {

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;
  int lineno;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError(lineno, "expected a number in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
  }

  BuilderSpec atom() {
    skip_ws();
    if (s.compare(pos, 5, "file(") == 0) {
      pos += 5;
      std::size_t close = s.find(')', pos);
      if (close == std::string::npos) throw ParseError(lineno, "unterminated file(...)");
      std::string p = s.substr(pos, close - pos);
      pos = close + 1;
      return BuilderSpec::from_file(p);
    }
    if (s.compare(pos, 3, "EA(") == 0) {
      pos += 3;
      int p = number();
      if (!eat(',')) throw ParseError(lineno, "EA needs two arguments");
      int k = number();
      if (!eat(')')) throw ParseError(lineno, "unterminated EA(...)");
      return BuilderSpec::elementary_abelian(p, k);
    }
    if (s.compare(pos, 4, "SDP(") == 0) {
      pos += 4;
      int m = number();
      if (!eat(',')) throw ParseError(lineno, "SDP needs three arguments");
      int n = number();
      if (!eat(',')) throw ParseError(lineno, "SDP needs three arguments");
      int k = number();
      if (!eat(')')) throw ParseError(lineno, "unterminated SDP(...)");
      return BuilderSpec::semidirect_cyclic(m, n, k);
    }
    if (s.compare(pos, 3, "Dic") == 0) {
      pos += 3;
      return BuilderSpec::dicyclic(number());
    }
    if (pos < s.size()) {
      char c = s[pos];
      if (c == 'C' || c == 'D' || c == 'S' || c == 'A') {
        ++pos;
        int n = number();
        switch (c) {
          case 'C': return BuilderSpec::cyclic(n);
          case 'D': return BuilderSpec::dihedral(n);
          case 'S': return BuilderSpec::symmetric(n);
          case 'A': return BuilderSpec::alternating(n);
        }
      }
    }
    throw ParseError(lineno, "cannot parse group expression '" + s + "'");
  }

  BuilderSpec expr() {
    std::vector<BuilderSpec> factors{atom()};
    skip_ws();
    while (pos < s.size() && s[pos] == 'x' &&
           (pos + 1 == s.size() || s[pos + 1] == ' ' || s[pos + 1] == '\t')) {
      ++pos;
      factors.push_back(atom());
      skip_ws();
    }
    if (factors.size() == 1) return factors[0];
    return BuilderSpec::product(std::move(factors));
  }
};

}  // namespace

std::vector<CatalogEntry> parse_manifest(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string label;
    std::string exprpart = line;
    auto eq = line.find('=');
    if (eq != std::string::npos) {
      label = line.substr(0, eq);
      exprpart = line.substr(eq + 1);
      while (!label.empty() && (label.back() == ' ' || label.back() == '\t')) label.pop_back();
      std::size_t st = 0;
      while (st < label.size() && (label[st] == ' ' || label[st] == '\t')) ++st;
      label.erase(0, st);
    }
    ExprParser p{exprpart, 0, lineno};
    p.skip_ws();
    if (p.pos == exprpart.size()) continue;  // blank / comment-only line
    BuilderSpec spec = p.expr();
    p.skip_ws();
    if (p.pos != exprpart.size())
      throw ParseError(lineno, "trailing characters in '" + exprpart + "'");
    if (label.empty()) label = spec.to_string();
    out.push_back({std::move(label), std::move(spec)});
  }
  return out;
}

std::vector<CatalogEntry> parse_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_manifest(in);
}

std::string manifest_hash(const std::vector<CatalogEntry>& entries) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  for (const auto& e : entries) {
    feed(e.label);
    feed(e.spec.to_string());
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace submod
