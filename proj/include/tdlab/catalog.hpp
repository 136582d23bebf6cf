/*
Copyright (C) 2026 The tdlab Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tdlab/exactla/matrix.hpp"
#include "tdlab/tdcore/verify.hpp"

namespace tdlab {

/// Malformed pair document; the message names the offending field or position.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator produced a candidate that failed the tridiagonal-pair axioms.
class RejectedNotTd : public std::runtime_error {
 public:
  explicit RejectedNotTd(AxiomVerdict verdict)
      : std::runtime_error("candidate is not a tridiagonal pair"), verdict_(std::move(verdict)) {}
  const AxiomVerdict& verdict() const { return verdict_; }

 private:
  AxiomVerdict verdict_;
};

/// Field-agnostic pair document. Entries are stored as canonical rationals; for a
/// prime field they are integers in [0, p).
struct PairDocument {
  std::string label;
  FieldSpec field;
  std::size_t n = 0;
  std::vector<Rational> A;  // row-major n x n
  std::vector<Rational> Astar;
  std::string provenance;

  friend bool operator==(const PairDocument&, const PairDocument&) = default;
};

namespace detail {

inline Rational parse_entry(const nlohmann::json& e, const FieldSpec& field, const std::string& where) {
  std::optional<Rational> value;
  if (e.is_number_integer()) {
    value = e.is_number_unsigned() ? Rational(mpz_class(std::to_string(e.get<std::uint64_t>())))
                                   : Rational(static_cast<long>(e.get<std::int64_t>()));
  } else if (e.is_string()) {
    value = Rational::parse(e.get<std::string>());
    if (!value) throw ParseError("field '" + where + "': malformed entry \"" + e.get<std::string>() + "\"");
  } else {
    throw ParseError("field '" + where + "': entry must be an integer or \"num/den\" string");
  }
  if (field.kind == FieldSpec::Kind::Prime) {
    if (!value->is_integer() || value->numerator() < 0 ||
        value->numerator() >= mpz_class(static_cast<unsigned long>(field.p))) {
      throw ParseError("field '" + where + "': entry " + value->to_string() + " out of field GF(" +
                       std::to_string(field.p) + ")");
    }
  }
  return *value;
}

inline std::vector<Rational> parse_grid(const nlohmann::json& doc, const char* key, std::size_t n,
                                        const FieldSpec& field) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const auto& grid = doc.at(key);
  if (!grid.is_array() || grid.size() != n) {
    throw ParseError(std::string("field '") + key + "': expected " + std::to_string(n) + " rows");
  }
  std::vector<Rational> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = grid[i];
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != n) {
      throw ParseError("field '" + where + "': expected " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) out.push_back(parse_entry(row[j], field, where + "[" + std::to_string(j) + "]"));
  }
  return out;
}

inline std::string entry_text(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) return std::to_string(r.numerator().get_si());
  return nlohmann::json(r.to_string()).dump();
}

inline void write_grid(std::ostringstream& os, const std::vector<Rational>& grid, std::size_t n) {
  os << "[\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << "    [";
    for (std::size_t j = 0; j < n; ++j) os << (j ? ", " : "") << entry_text(grid[i * n + j]);
    os << "]" << (i + 1 < n ? "," : "") << "\n";
  }
  os << "  ]";
}

}  // namespace detail

/// Parses a pair document (UTF-8 JSON object, nothing after it).
inline PairDocument load_document(std::string_view bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  PairDocument out;
  if (!doc.contains("label") || !doc["label"].is_string()) throw ParseError("field 'label': missing or not a string");
  out.label = doc["label"].get<std::string>();

  if (!doc.contains("field") || !doc["field"].is_object()) throw ParseError("field 'field': missing or not an object");
  const auto& field = doc["field"];
  const auto kind = field.value("kind", std::string());
  if (kind == "rational") {
    out.field = FieldSpec::rational();
  } else if (kind == "prime") {
    if (!field.contains("p") || !field["p"].is_number_integer()) throw ParseError("field 'field.p': missing integer");
    const auto p = field["p"].get<std::int64_t>();
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw ParseError("field 'field.p': p not prime");
    if (static_cast<std::uint64_t>(p) > kMaxPrime) throw ParseError("field 'field.p': p must be below 2^32");
    out.field = FieldSpec{FieldSpec::Kind::Prime, static_cast<std::uint64_t>(p)};
  } else {
    throw ParseError("field 'field.kind': expected \"rational\" or \"prime\"");
  }

  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("field 'n': missing integer");
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 1) throw ParseError("field 'n': dimension must be positive");
  if (n > 64) throw ParseError("field 'n': dimension above 64 not supported");
  out.n = static_cast<std::size_t>(n);
  out.A = detail::parse_grid(doc, "A", out.n, out.field);
  out.Astar = detail::parse_grid(doc, "Astar", out.n, out.field);
  if (doc.contains("provenance")) {
    if (!doc["provenance"].is_string()) throw ParseError("field 'provenance': not a string");
    out.provenance = doc["provenance"].get<std::string>();
  }
  return out;
}

inline PairDocument load_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_document(buf.str());
}

/// Canonical serialization: fixed key order, one matrix row per line, integers
/// as JSON numbers and other rationals as "num/den" strings.
inline std::string save_document(const PairDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"label\": " << nlohmann::json(doc.label).dump() << ",\n";
  if (doc.field.kind == FieldSpec::Kind::Rational) {
    os << "  \"field\": {\"kind\": \"rational\"},\n";
  } else {
    os << "  \"field\": {\"kind\": \"prime\", \"p\": " << doc.field.p << "},\n";
  }
  os << "  \"n\": " << doc.n << ",\n";
  os << "  \"A\": ";
  detail::write_grid(os, doc.A, doc.n);
  os << ",\n  \"Astar\": ";
  detail::write_grid(os, doc.Astar, doc.n);
  if (!doc.provenance.empty()) os << ",\n  \"provenance\": " << nlohmann::json(doc.provenance).dump();
  os << "\n}\n";
  return os.str();
}

template <ExactField F>
Matrix<F> grid_to_matrix(const F& field, const std::vector<Rational>& grid, std::size_t n) {
  Matrix<F> m(field, n, n);
  for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = field.from_rational(grid[k]);
  return m;
}

template <ExactField F>
std::pair<Matrix<F>, Matrix<F>> to_matrices(const PairDocument& doc, const F& field) {
  if (!(field.spec() == doc.field)) throw std::invalid_argument("to_matrices: field does not match document");
  return {grid_to_matrix(field, doc.A, doc.n), grid_to_matrix(field, doc.Astar, doc.n)};
}

namespace detail {

inline Rational to_rational(const Rational& r) { return r; }
inline Rational to_rational(const Residue& r) { return Rational(static_cast<long>(r.value())); }

template <ExactField F>
std::vector<Rational> matrix_to_grid(const Matrix<F>& m) {
  std::vector<Rational> out;
  for (const auto& x : m.data()) out.push_back(to_rational(x));
  return out;
}

}  // namespace detail

template <ExactField F>
PairDocument make_document(std::string label, const Matrix<F>& a, const Matrix<F>& astar, std::string provenance = {}) {
  return {std::move(label), a.field().spec(), a.rows(), detail::matrix_to_grid(a), detail::matrix_to_grid(astar),
          std::move(provenance)};
}

/// Verifies the pair stored in a document over its own field.
inline AxiomVerdict verify_document(const PairDocument& doc) {
  return with_field(doc.field, [&](const auto& field) {
    auto [a, astar] = to_matrices(doc, field);
    return verify_tridiagonal_pair(a, astar);
  });
}

/// Krawtchouk-type Leonard pair: A* = diag(d - 2i), A tridiagonal with
/// A[i+1][i] = i+1 and A[i][i+1] = d-i. Needs p > 2d over GF(p).
inline PairDocument gen_krawtchouk(std::size_t d, const FieldSpec& field) {
  if (field.kind == FieldSpec::Kind::Prime && field.p <= 2 * d) {
    throw std::invalid_argument("krawtchouk: need p > 2d (p=" + std::to_string(field.p) + ", d=" + std::to_string(d) + ")");
  }
  const std::size_t n = d + 1;
  return with_field(field, [&](const auto& f) {
    using Fld = std::decay_t<decltype(f)>;
    Matrix<Fld> a(f, n, n), astar(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      astar(i, i) = f.from_int(static_cast<long>(d) - 2 * static_cast<long>(i));
      if (i + 1 < n) {
        a(i + 1, i) = f.from_int(static_cast<long>(i + 1));
        a(i, i + 1) = f.from_int(static_cast<long>(d - i));
      }
    }
    auto verdict = verify_tridiagonal_pair(a, astar);
    if (!verdict.accepted) throw RejectedNotTd(verdict);
    return make_document("krawtchouk-d" + std::to_string(d) + "-" + field.to_string(), a, astar,
                         "generated: krawtchouk family, d=" + std::to_string(d) + ", field " + field.to_string());
  });
}

struct SplitFormResult {
  std::optional<PairDocument> document;  // present iff the verdict accepted the candidate
  AxiomVerdict verdict;
};

/// Split-form candidate: A lower bidiagonal (diagonal theta, subdiagonal 1), A* upper
/// bidiagonal (diagonal thetastar, superdiagonal phi). Kept only if the axioms hold.
inline SplitFormResult gen_split_form(const FieldSpec& field, const std::vector<Rational>& theta,
                                      const std::vector<Rational>& thetastar, const std::vector<Rational>& phi) {
  if (theta.empty() || thetastar.size() != theta.size() || phi.size() + 1 != theta.size()) {
    throw std::invalid_argument("split form: need |theta| = |thetastar| = |phi| + 1 >= 1");
  }
  const std::size_t n = theta.size();
  return with_field(field, [&](const auto& f) {
    using Fld = std::decay_t<decltype(f)>;
    Vec<Fld> th, ths, ph;
    for (const auto& x : theta) th.push_back(f.from_rational(x));
    for (const auto& x : thetastar) ths.push_back(f.from_rational(x));
    for (const auto& x : phi) ph.push_back(f.from_rational(x));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (th[i] == th[j]) throw std::invalid_argument("split form: theta values not distinct");
        if (ths[i] == ths[j]) throw std::invalid_argument("split form: thetastar values not distinct");
      }
    for (const auto& x : ph) {
      if (x.is_zero()) throw std::invalid_argument("split form: phi values must be nonzero");
    }
    Matrix<Fld> a(f, n, n), astar(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      a(i, i) = th[i];
      astar(i, i) = ths[i];
      if (i + 1 < n) {
        a(i + 1, i) = f.one();
        astar(i, i + 1) = ph[i];
      }
    }
    SplitFormResult out;
    out.verdict = verify_tridiagonal_pair(a, astar);
    if (out.verdict.accepted) {
      auto join = [](const std::vector<Rational>& v) {
        std::string s;
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].to_string();
        return s;
      };
      out.document = make_document("split-d" + std::to_string(n - 1), a, astar,
                                   "generated: split form theta=" + join(theta) + " thetastar=" + join(thetastar) +
                                       " phi=" + join(phi) + ", field " + field.to_string());
    }
    return out;
  });
}

}  // namespace tdlab
