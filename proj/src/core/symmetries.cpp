#include "cgexact/symmetries.hpp"

#include "cgexact/combinatorics.hpp"
#include "cgexact/weight_basis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace cgexact {

bool ReggeSymbol::valid() const {
  const long s = magic_sum();
  for (int r = 0; r < 3; ++r) {
    long row = 0, col = 0;
    for (int c = 0; c < 3; ++c) {
      if (grid[r][c] < 0) return false;
      row += grid[r][c];
      col += grid[c][r];
    }
    if (row != s || col != s) return false;
  }
  return true;
}

ReggeSymbol regge_symbol(const IndexTuple& t) {
  require_window(t, "regge_symbol");
  const auto [m, n, k, i, j] = t;
  return {{{{n - k, m - k, k}, {i, j, m + n - i - j - k}, {m - i, n - j, i + j - k}}}};
}

IndexTuple symbol_to_indices(const ReggeSymbol& s) {
  if (!s.valid()) throw DomainError("symbol_to_indices: not a valid Regge symbol");
  const auto& g = s.grid;
  return {g[0][1] + g[0][2], g[0][0] + g[0][2], g[0][2], g[1][0], g[1][1]};
}

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::C12: return "C12";
    case Generator::Transpose: return "Transpose";
    case Generator::ModifiedTranspose: return "ModifiedTranspose";
    case Generator::R13: return "R13";
    case Generator::R23: return "R23";
  }
  return "?";
}

IndexTuple transform_indices(const IndexTuple& t, Generator g) {
  require_window(t, "transform_indices");
  const auto [m, n, k, i, j] = t;
  switch (g) {
    case Generator::C12: return {n, m, k, j, i};
    case Generator::Transpose: return {m, m + n - i - k, m - i, m - k, j};
    case Generator::ModifiedTranspose: return {m, n - k + i, i, k, i + j - k};
    case Generator::R13: return {n - k + i, m - k + j, i + j - k, i, j};
    case Generator::R23: return {m, n, k, m - i, n - j};
  }
  throw DomainError("unknown generator");
}

ReggeSymbol ReggeElement::apply(const ReggeSymbol& s) const {
  ReggeSymbol out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const int sr = row_perm[r], sc = col_perm[c];
      out.grid[r][c] = transposed ? s.grid[sc][sr] : s.grid[sr][sc];
    }
  return out;
}

ReggeElement generator_element(Generator g) {
  switch (g) {
    case Generator::C12: return {{0, 1, 2}, {1, 0, 2}, false};
    case Generator::Transpose: return {{0, 1, 2}, {0, 1, 2}, true};
    case Generator::ModifiedTranspose: return {{0, 2, 1}, {0, 2, 1}, true};
    case Generator::R13: return {{2, 1, 0}, {0, 1, 2}, false};
    case Generator::R23: return {{0, 2, 1}, {0, 1, 2}, false};
  }
  throw DomainError("unknown generator");
}

namespace {

constexpr Generator kWordGenerators[] = {Generator::C12, Generator::R13, Generator::R23,
                                         Generator::ModifiedTranspose};

struct GroupTables {
  std::vector<ReggeElement> elements;  // BFS order from the identity
  std::vector<int> parent;             // -1 for the identity
  std::vector<Generator> last;         // generator applied after the parent
  std::vector<std::vector<Generator>> words;
};

ReggeSymbol label_grid() {
  ReggeSymbol s;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) s.grid[r][c] = 3 * r + c;
  return s;
}

const GroupTables& group_tables() {
  static const GroupTables tables = [] {
    // every element, keyed by its action on a grid of distinct labels
    std::map<ReggeSymbol, ReggeElement> by_action;
    std::array<int, 3> perm{0, 1, 2};
    std::vector<std::array<int, 3>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    const ReggeSymbol labels = label_grid();
    for (bool tr : {false, true})
      for (const auto& rp : perms)
        for (const auto& cp : perms) {
          ReggeElement e{rp, cp, tr};
          by_action.emplace(e.apply(labels), e);
        }

    GroupTables t;
    std::map<ReggeSymbol, int> seen;
    const ReggeElement id{};
    t.elements.push_back(id);
    t.parent.push_back(-1);
    t.last.push_back(Generator::C12);
    t.words.push_back({});
    seen.emplace(id.apply(labels), 0);
    for (std::size_t head = 0; head < t.elements.size(); ++head) {
      const ReggeSymbol current = t.elements[head].apply(labels);
      for (Generator g : kWordGenerators) {
        const ReggeSymbol next = generator_element(g).apply(current);
        if (seen.count(next)) continue;
        const int index = static_cast<int>(t.elements.size());
        seen.emplace(next, index);
        t.elements.push_back(by_action.at(next));
        t.parent.push_back(static_cast<int>(head));
        t.last.push_back(g);
        auto word = t.words[head];
        word.push_back(g);
        t.words.push_back(std::move(word));
      }
    }
    if (t.elements.size() != 72 || by_action.size() != 72)
      throw InternalError("Regge generators do not generate a group of order 72");
    return t;
  }();
  return tables;
}

Rational ratio(const Integer& num, const Integer& den) { return make_rational(num, den); }

RelatedCoord related_primary(Generator g, const IndexTuple& t) {
  const auto [m, n, k, i, j] = t;
  const long total = m + n - k;
  IndexTuple image = transform_indices(t, g);
  switch (g) {
    case Generator::C12:
      return {image, Rational(sign_power(k))};
    case Generator::ModifiedTranspose:
      return {image, ratio(binomial(m - k + j, m - i), binomial(m - k + j, m - k))};
    case Generator::R13:
      return {image, sign_power(i) * ratio(multinomial(total, m - i, n - j, i + j - k),
                                           multinomial(total, m - k, n - k, k))};
    case Generator::R23:
      return {image, sign_power(k) * ratio(multinomial2(total, m - i, n - j),
                                           multinomial2(total, i, j))};
    case Generator::Transpose:
      break;
  }
  throw InternalError("related_primary called with a composite generator");
}

}  // namespace

const std::vector<ReggeElement>& regge_group() { return group_tables().elements; }

const std::vector<std::vector<Generator>>& regge_words() { return group_tables().words; }

std::vector<OrbitMember> regge_orbit_members(const IndexTuple& t) {
  require_window(t, "regge_orbit");
  const auto& tables = group_tables();
  std::vector<OrbitMember> out;
  out.reserve(tables.elements.size());
  out.push_back({tables.elements[0], t, Rational(1)});
  for (std::size_t e = 1; e < tables.elements.size(); ++e) {
    const OrbitMember& from = out[tables.parent[e]];
    RelatedCoord step = related_primary(tables.last[e], from.indices);
    out.push_back({tables.elements[e], step.indices, step.factor * from.factor});
  }
  return out;
}

RelatedCoord related_coord(Generator g, const IndexTuple& t) {
  require_window(t, "related_coord");
  if (g != Generator::Transpose) return related_primary(g, t);
  const auto& tables = group_tables();
  const ReggeElement target = generator_element(g);
  const auto it = std::find(tables.elements.begin(), tables.elements.end(), target);
  IndexTuple cur = t;
  Rational factor = 1;
  for (Generator step : tables.words[it - tables.elements.begin()]) {
    RelatedCoord r = related_primary(step, cur);
    cur = r.indices;
    factor *= r.factor;
  }
  return {cur, factor};
}

std::set<IndexTuple> regge_orbit(const IndexTuple& t) {
  std::set<IndexTuple> out;
  const ReggeSymbol s = regge_symbol(t);
  for (const auto& e : regge_group()) out.insert(symbol_to_indices(e.apply(s)));
  return out;
}

Report verify_regge(long m, long n) {
  Report report;
  if (m < 0 || n < 0) return report;
  auto& sums = report.family("regge.symbol_line_sums");
  auto& roundtrip = report.family("regge.symbol_roundtrip");
  auto& layout = report.family("regge.generator_matches_symbol_action");
  auto& involution = report.family("regge.involutions");
  auto& weyl = report.family("regge.weyl_factor");
  auto& closure = report.family("regge.orbit_closure");
  auto& orbit_factor = report.family("regge.orbit_factors");
  std::map<Generator, IdentityCheck*> relation;
  for (Generator g : {Generator::C12, Generator::Transpose, Generator::ModifiedTranspose,
                      Generator::R13, Generator::R23})
    relation[g] = &report.family("regge.relation." + std::string(generator_name(g)));

  const auto& group = regge_group();
  for (long k = 0; k <= std::min(m, n); ++k)
    for (long i = 0; i <= m; ++i)
      for (long j = 0; j <= n; ++j) {
        const IndexTuple t{m, n, k, i, j};
        if (!t.window_valid()) continue;
        const auto here = [&] { return t.str(); };
        const ReggeSymbol s = regge_symbol(t);
        const Integer c = coord(m, n, k, i, j);

        bool sums_ok = s.valid() && s.magic_sum() == m + n - k;
        for (const auto& e : group) sums_ok = sums_ok && e.apply(s).valid() &&
                                              e.apply(s).magic_sum() == m + n - k;
        sums.check(sums_ok, here);
        roundtrip.check(symbol_to_indices(s) == t, here);

        for (auto& [g, check] : relation) {
          const RelatedCoord r = related_coord(g, t);
          const bool ok = r.indices.window_valid() && r.indices == transform_indices(t, g) &&
                          Rational(coord(r.indices.m, r.indices.n, r.indices.k, r.indices.i,
                                         r.indices.j)) == r.factor * c;
          check->check(ok, [&] { return std::string(generator_name(g)) + " at " + t.str(); });
          layout.check(regge_symbol(transform_indices(t, g)) == generator_element(g).apply(s),
                       [&] { return std::string(generator_name(g)) + " at " + t.str(); });
        }
        for (Generator g : {Generator::C12, Generator::R23, Generator::Transpose}) {
          involution.check(transform_indices(transform_indices(t, g), g) == t, [&] {
            return std::string(generator_name(g)) + " at " + t.str();
          });
        }

        // sign and factorial ratio from the Weyl element acting on both
        // tensor factors and on the summand
        {
          const long p = i + j, total = m + n - k;
          Rational w = make_rational(factorial(i) * factorial(j) * factorial(total - p),
                                     factorial(m - i) * factorial(n - j) * factorial(p - k));
          if ((p + (p - k)) % 2 != 0) w = -w;
          weyl.check(w == related_coord(Generator::R23, t).factor, here);
        }

        const auto members = regge_orbit_members(t);
        std::set<IndexTuple> orbit;
        bool factors_ok = true;
        for (std::size_t e = 0; e < members.size(); ++e) {
          const auto& mem = members[e];
          orbit.insert(mem.indices);
          factors_ok = factors_ok && mem.indices.window_valid() &&
                       symbol_to_indices(group[e].apply(s)) == mem.indices &&
                       Rational(coord(mem.indices.m, mem.indices.n, mem.indices.k,
                                      mem.indices.i, mem.indices.j)) == mem.factor * c;
        }
        orbit_factor.check(factors_ok, here);
        bool closed = 72 % orbit.size() == 0;
        for (const auto& member : orbit) {
          const ReggeSymbol ms = regge_symbol(member);
          for (const auto& e : group) closed = closed && orbit.count(symbol_to_indices(e.apply(ms)));
        }
        closure.check(closed, [&] {
          return t.str() + " orbit size " + std::to_string(orbit.size());
        });
      }
  return report;
}

Report verify_recurrences(long m, long n) {
  Report report;
  if (m < 0 || n < 0) return report;
  auto& pascal = report.family("recurrence.pascal");
  auto& reverse = report.family("recurrence.reverse");
  auto& drop_m = report.family("recurrence.outer_lower_m");
  auto& drop_n = report.family("recurrence.outer_lower_n");
  auto& diagonal = report.family("recurrence.outer_lower_m_or_n");
  auto& raise_k = report.family("recurrence.outer_raise_k");

  // cross-summand terms use the unrestricted sum; a term takes part only if
  // its triple is structurally valid and i+j >= k
  struct Term {
    long m, n, k, i, j;
    bool usable() const { return structurally_valid(m, n, k) && i + j >= k; }
    Integer value() const { return coord_unrestricted(m, n, k, i, j); }
  };

  for (long k = 0; k <= std::min(m, n); ++k)
    for (long i = 0; i <= m; ++i)
      for (long j = 0; j <= n; ++j) {
        const IndexTuple t{m, n, k, i, j};
        if (!t.window_valid()) continue;
        const auto here = [&] { return t.str(); };
        const Integer c = coord(m, n, k, i, j);

        if (i + j > k)
          pascal.check(c == coord(m, n, k, i, j - 1) + coord(m, n, k, i - 1, j), here);

        const long ip = i + j - k;
        Integer lhs = Integer(ip + 1) * (m + n - 2 * k - ip) * c;
        Integer rhs = Integer(i + 1) * (m - i) * coord(m, n, k, i + 1, j) +
                      Integer(j + 1) * (n - j) * coord(m, n, k, i, j + 1);
        reverse.check(lhs == rhs, here);

        auto outer = [&](IdentityCheck& check, Term a, int sign, Term b) {
          if (!a.usable() || !b.usable()) return;
          check.check(c == a.value() + sign * b.value(), here);
        };
        outer(drop_m, {m - 1, n, k, i, j}, +1, {m - 1, n - 1, k - 1, i, j - 1});
        outer(drop_n, {m, n - 1, k, i, j}, -1, {m - 1, n - 1, k - 1, i - 1, j});
        outer(diagonal, {m - 1, n, k, i - 1, j}, +1, {m, n - 1, k, i, j - 1});
        outer(raise_k, {m + 1, n, k + 1, i, j}, -1, {m, n + 1, k + 1, i, j});
      }
  return report;
}

}  // namespace cgexact
