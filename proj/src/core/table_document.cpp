#include "cgexact/table_document.hpp"

#include "cgexact/clebsch_gordan.hpp"
#include "cgexact/projectors.hpp"
#include "cgexact/weight_basis.hpp"
#include "parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <type_traits>

namespace cgexact {

using json = nlohmann::ordered_json;

TableDocument build_table(long m, long n, std::optional<long> only_k, unsigned threads) {
  if (m < 0 || n < 0) throw DomainError("table: m and n must be nonnegative");
  std::vector<long> ks;
  if (only_k) {
    require_structural(m, n, *only_k, "table");
    ks.push_back(*only_k);
  } else {
    for (long k = 0; k <= std::min(m, n); ++k) ks.push_back(k);
  }
  TableDocument doc;
  doc.m = m;
  doc.n = n;
  doc.blocks.resize(ks.size());
  detail::parallel_for(ks.size(), detail::worker_count(threads), [&](std::size_t b) {
    const long k = ks[b];
    CoordinateMatrix coords = coordinate_matrix(m, n, k);
    CGMatrix cgs = cg_matrix(coords);
    doc.blocks[b] = {k, k % 2 == 0 ? 1 : -1, normalizer(m, n, k), std::move(coords.entries),
                     std::move(cgs.entries)};
  });
  return doc;
}

namespace {

template <class T>
json matrix_json(const Matrix<T>& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_string(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw DomainError(std::string("table json: missing field '") + key + "'");
  return obj.at(key);
}

std::string string_field(const json& obj, const char* key) {
  const json& v = member(obj, key);
  if (!v.is_string()) throw DomainError(std::string("table json: field '") + key + "' must be a string");
  return v.get<std::string>();
}

long long_field(const json& obj, const char* key) {
  const Rational q = parse_rational(string_field(obj, key));
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw DomainError(std::string("table json: field '") + key + "' must be a small integer");
  return q.get_num().get_si();
}

template <class T>
Matrix<T> matrix_field(const json& obj, const char* key, std::size_t rows, std::size_t cols) {
  const json& v = member(obj, key);
  if (!v.is_array() || v.size() != rows)
    throw DomainError(std::string("table json: '") + key + "' has the wrong number of rows");
  Matrix<T> out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array() || v[r].size() != cols)
      throw DomainError(std::string("table json: '") + key + "' has a row of the wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!v[r][c].is_string()) throw DomainError("table json: matrix entries must be strings");
      const Rational q = parse_rational(v[r][c].get<std::string>());
      if constexpr (std::is_same_v<T, Integer>) {
        if (!is_integer(q)) throw DomainError("table json: coordinate entries must be integers");
        out(r, c) = q.get_num();
      } else {
        out(r, c) = q;
      }
    }
  }
  return out;
}

}  // namespace

std::string table_to_json(const TableDocument& doc) {
  json blocks = json::array();
  for (const auto& b : doc.blocks) {
    blocks.push_back({{"k", std::to_string(b.k)},
                      {"sign", std::to_string(b.sign)},
                      {"normalizer", to_string(b.normalizer)},
                      {"coordinates", matrix_json(b.coordinates)},
                      {"cg", matrix_json(b.cg)}});
  }
  json out = {{"format_version", doc.format_version},
              {"m", std::to_string(doc.m)},
              {"n", std::to_string(doc.n)},
              {"blocks", std::move(blocks)}};
  return out.dump(2) + "\n";
}

TableDocument table_from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("table json: ") + e.what());
  }
  TableDocument doc;
  doc.format_version = string_field(root, "format_version");
  if (doc.format_version != kTableFormatVersion)
    throw DomainError("table json: unsupported format_version '" + doc.format_version + "'");
  doc.m = long_field(root, "m");
  doc.n = long_field(root, "n");
  if (doc.m < 0 || doc.n < 0) throw DomainError("table json: m and n must be nonnegative");
  const json& blocks = member(root, "blocks");
  if (!blocks.is_array()) throw DomainError("table json: 'blocks' must be an array");
  for (const json& b : blocks) {
    TableBlock block;
    block.k = long_field(b, "k");
    require_structural(doc.m, doc.n, block.k, "table json");
    block.sign = static_cast<int>(long_field(b, "sign"));
    if (block.sign != (block.k % 2 == 0 ? 1 : -1))
      throw DomainError("table json: sign does not match k");
    block.normalizer = parse_rational(string_field(b, "normalizer")).get_num();
    const std::size_t rows = doc.m + 1;
    const std::size_t cols = doc.m + doc.n - 2 * block.k + 1;
    block.coordinates = matrix_field<Integer>(b, "coordinates", rows, cols);
    block.cg = matrix_field<Rational>(b, "cg", rows, cols);
    doc.blocks.push_back(std::move(block));
  }
  return doc;
}

std::string table_to_csv(const TableDocument& doc, bool su2_labels) {
  std::ostringstream os;
  os << "m,n,k,i,j,c,C";
  if (su2_labels) os << ",j1,j2,j,m1,m2";
  os << "\n";
  const long m = doc.m, n = doc.n;
  auto half = [](long twice) { return to_string(make_rational(twice, 2)); };
  for (const auto& b : doc.blocks)
    for (long i = 0; i <= m; ++i)
      for (long j = 0; j <= n; ++j) {
        if (!IndexTuple{m, n, b.k, i, j}.window_valid()) continue;
        const std::size_t col = i + j - b.k;
        os << m << ',' << n << ',' << b.k << ',' << i << ',' << j << ','
           << to_string(b.coordinates(i, col)) << ',' << to_string(b.cg(i, col));
        if (su2_labels)
          os << ',' << half(m) << ',' << half(n) << ',' << half(m + n - 2 * b.k) << ','
             << half(m - 2 * i) << ',' << half(n - 2 * j);
        os << "\n";
      }
  return os.str();
}

namespace {

std::vector<std::string> bracket_rows(const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 1;
  for (const auto& row : cells)
    for (const auto& s : row) width = std::max(width, s.size());
  std::vector<std::string> out;
  for (const auto& row : cells) {
    std::string line = "[";
    for (const auto& s : row) line += " " + std::string(width - s.size(), ' ') + s;
    out.push_back(line + " ]");
  }
  return out;
}

template <class T>
std::vector<std::vector<std::string>> cells(const Matrix<T>& a) {
  std::vector<std::vector<std::string>> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r].push_back(to_string(a(r, c)));
  return out;
}

// label in front of the first row, blank padding in front of the others
std::vector<std::string> labelled(const std::string& label, const std::vector<std::string>& rows) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < rows.size(); ++r)
    out.push_back((r == 0 ? label : std::string(label.size(), ' ')) + rows[r]);
  return out;
}

Integer common_denominator(const RationalMatrix& a) {
  Integer l = 1;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den().get_mpz_t());
  return l;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

template <class T>
std::string vector_text(const std::vector<T>& v) {
  std::string out = "(";
  for (std::size_t e = 0; e < v.size(); ++e) {
    if (e) out += ", ";
    if constexpr (std::is_same_v<T, std::string>)
      out += v[e];
    else
      out += to_string(v[e]);
  }
  return out + ")";
}

/// "(a, b, ...)" for integer entries, else "1/L (a, b, ...)" with L the common denominator.
std::string scaled_vector_text(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const Rational& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Integer> scaled;
  for (const Rational& q : v) scaled.push_back(Integer(q * l));
  if (l == 1) return vector_text(scaled);
  return "1/" + to_string(l) + " " + vector_text(scaled);
}

}  // namespace

std::string format_scaled_matrix(const RationalMatrix& a) {
  const Integer l = common_denominator(a);
  if (l == 1) return join_lines(bracket_rows(cells(a)));
  RationalMatrix scaled = a * Rational(l);
  return join_lines(labelled("1/" + to_string(l) + " ", bracket_rows(cells(scaled))));
}

std::string table_to_pretty(const TableDocument& doc) {
  std::ostringstream os;
  const long m = doc.m, n = doc.n;
  os << "V(" << m << ") (x) V(" << n << ") =";
  for (long k = 0; k <= std::min(m, n); ++k) os << (k ? " + " : " ") << "V(" << m + n - 2 * k << ")";
  os << "\n";
  for (const auto& b : doc.blocks) {
    os << "\nk=" << b.k << ": V(" << m + n - 2 * b.k << ") in V(" << m << ") (x) V(" << n
       << "), D = " << to_string(b.normalizer) << "\n";
    const Rational prefactor = make_rational(b.sign, b.normalizer);
    IntegerMatrix inner(b.cg.rows(), b.cg.cols());
    for (std::size_t r = 0; r < inner.rows(); ++r)
      for (std::size_t c = 0; c < inner.cols(); ++c) {
        const Rational q = b.cg(r, c) / prefactor;
        if (!is_integer(q)) throw InternalError("pretty table: non-integral scaled coefficient");
        inner(r, c) = q.get_num();
      }
    const auto left = bracket_rows(cells(b.coordinates));
    const auto right = labelled(to_string(prefactor) + " ", bracket_rows(cells(inner)));
    for (std::size_t r = 0; r < left.size(); ++r) os << left[r] << "    " << right[r] << "\n";
  }
  return os.str();
}

ProjectorDocument build_projectors(long m, long n, long p, std::optional<long> only_k) {
  ProjectorDocument doc;
  doc.m = m;
  doc.n = n;
  doc.p = p;
  doc.ef = tridiagonal_ef(m, n, p);
  doc.first_i = weight_range(m, n, p).lo;
  std::vector<long> ks = summands_in_weight_space(m, n, p);
  if (only_k) {
    if (std::find(ks.begin(), ks.end(), *only_k) == ks.end())
      throw DomainError("projector: summand k=" + std::to_string(*only_k) +
                        " does not meet weight space p=" + std::to_string(p));
    ks = {*only_k};
  }
  for (long k : ks) {
    ProjectorFactors f = projector_factorization(m, n, p, k);
    doc.blocks.push_back({k, ef_eigenvalue(m, n, k, p), projector(m, n, p, k), std::move(f.column),
                          std::move(f.row)});
  }
  if (!only_k) {
    const std::size_t size = doc.ef.rows();
    for (std::size_t basis = 0; basis < size; ++basis) {
      std::vector<std::vector<Rational>> parts;
      for (const auto& b : doc.blocks) parts.push_back(b.projector.column(basis));
      doc.decomposition.push_back(std::move(parts));
    }
  }
  return doc;
}

std::string projectors_to_json(const ProjectorDocument& doc) {
  json blocks = json::array();
  for (const auto& b : doc.blocks) {
    json column = json::array(), row = json::array();
    for (const auto& v : b.column) column.push_back(to_string(v));
    for (const auto& v : b.row) row.push_back(to_string(v));
    blocks.push_back({{"k", std::to_string(b.k)},
                      {"eigenvalue", to_string(b.eigenvalue)},
                      {"projector", matrix_json(b.projector)},
                      {"column", std::move(column)},
                      {"row", std::move(row)}});
  }
  json decomposition = json::array();
  for (const auto& parts : doc.decomposition) {
    json entry = json::array();
    for (std::size_t s = 0; s < parts.size(); ++s) {
      json coords = json::array();
      for (const auto& v : parts[s]) coords.push_back(to_string(v));
      entry.push_back({{"k", std::to_string(doc.blocks[s].k)}, {"coords", std::move(coords)}});
    }
    decomposition.push_back(std::move(entry));
  }
  json out = {{"format_version", std::string(kTableFormatVersion)},
              {"m", std::to_string(doc.m)},
              {"n", std::to_string(doc.n)},
              {"p", std::to_string(doc.p)},
              {"first_i", std::to_string(doc.first_i)},
              {"ef", matrix_json(doc.ef)},
              {"blocks", std::move(blocks)},
              {"decomposition", std::move(decomposition)}};
  return out.dump(2) + "\n";
}

std::string projectors_to_pretty(const ProjectorDocument& doc) {
  std::ostringstream os;
  const long size = static_cast<long>(doc.ef.rows());
  os << "weight space p=" << doc.p << " of V(" << doc.m << ") (x) V(" << doc.n << "): weight "
     << doc.m + doc.n - 2 * doc.p << ", basis f^i phi_" << doc.m << " (x) f^(" << doc.p
     << "-i) phi_" << doc.n << " for i = " << doc.first_i << ".." << doc.first_i + size - 1
     << "\n\nef matrix:\n"
     << format_scaled_matrix(doc.ef);
  os << "\neigenvalues:";
  for (const auto& b : doc.blocks)
    os << " " << to_string(b.eigenvalue) << " (V(" << doc.m + doc.n - 2 * b.k << "))";
  os << "\n";
  for (const auto& b : doc.blocks) {
    os << "\nk=" << b.k << ": V(" << doc.m + doc.n - 2 * b.k << "), eigenvalue "
       << to_string(b.eigenvalue) << "\n"
       << format_scaled_matrix(b.projector) << "factorization: column " << vector_text(b.column)
       << " times row " << scaled_vector_text(b.row) << "\n";
  }
  if (!doc.decomposition.empty()) os << "\ndecomposition of basis vectors:\n";
  for (std::size_t basis = 0; basis < doc.decomposition.size(); ++basis) {
    std::vector<std::string> unit(size, "0");
    unit[basis] = "1";
    os << vector_text(unit) << " =\n";
    for (std::size_t s = 0; s < doc.blocks.size(); ++s)
      os << "  V(" << doc.m + doc.n - 2 * doc.blocks[s].k << "): "
         << vector_text(doc.decomposition[basis][s]) << "\n";
  }
  return os.str();
}

}  // namespace cgexact
