#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycloribbon/io/serialize.hpp"
#include "cycloribbon/io/literals.hpp"
#include "cycloribbon/representation/modules.hpp"

namespace cycloribbon {

/// Integer matrix with textual row and column labels.
struct LabeledMatrix {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<Integer>> entries;

  const Integer& at(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }

  Integer row_sum(std::size_t i) const {
    Integer s = 0;
    for (const auto& x : entries.at(i)) s += x;
    return s;
  }

  friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

inline Integer require_integer(const Rational& c) {
  if (!is_integer(c)) throw std::logic_error("non-integral matrix entry " + to_string(c));
  return c.get_num();
}

}  // namespace detail

/// First row: empty corner then column labels; each later row: label then entries.
inline std::string to_csv(const LabeledMatrix& m) {
  std::ostringstream os;
  os << "";
  for (const auto& c : m.cols) os << ',' << detail::csv_field(c);
  os << '\n';
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    os << detail::csv_field(m.rows[i]);
    for (const auto& x : m.entries[i]) os << ',' << x.get_str();
    os << '\n';
  }
  return os.str();
}

inline Json to_json(const LabeledMatrix& m) {
  Json entries = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& x : row) {
      if (!x.fits_slong_p()) throw std::overflow_error("matrix entry exceeds 64 bits");
      r.push_back(x.get_si());
    }
    entries.push_back(std::move(r));
  }
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(entries)}};
}

inline std::vector<std::string> simple_labels_text(const std::vector<SimpleLabel>& simples) {
  std::vector<std::string> out;
  for (const auto& s : simples) out.push_back(format_ribbon(s.ribbon()));
  return out;
}

/// Rows are projectives (colored compositions), columns simples
/// (cycloribbons); entry = coefficient of F_col in c(R_row).
inline LabeledMatrix cartan_matrix(int n, int r) {
  const auto simples = all_simples(n, r);
  const auto projectives = all_projectives(n, r);
  LabeledMatrix m;
  m.cols = simple_labels_text(simples);
  for (const auto& p : projectives) {
    m.rows.push_back(format_colored_composition(p.colored_composition()));
    const auto image = cartan_map(projective_class(p));
    std::vector<Integer> row;
    for (const auto& s : simples) row.push_back(detail::require_integer(image.coefficient(to_label(s.ribbon()))));
    m.entries.push_back(std::move(row));
  }
  return m;
}

/// Matrix of e from the R basis to h-monomials.
inline LabeledMatrix e_matrix(int n, int r) {
  const auto monomials = h_monomials(n, r);
  LabeledMatrix m;
  for (const auto& h : monomials) m.cols.push_back(format_label(Basis::SYM_h, h));
  for (const auto& p : all_projectives(n, r)) {
    m.rows.push_back(format_colored_composition(p.colored_composition()));
    const auto image = e_map(projective_class(p));
    std::vector<Integer> row;
    for (const auto& h : monomials) row.push_back(detail::require_integer(image.coefficient(h)));
    m.entries.push_back(std::move(row));
  }
  return m;
}

/// Matrix of d from h-monomials to the F basis.
inline LabeledMatrix d_matrix(int n, int r) {
  const auto simples = all_simples(n, r);
  LabeledMatrix m;
  m.cols = simple_labels_text(simples);
  for (const auto& h : h_monomials(n, r)) {
    m.rows.push_back(format_label(Basis::SYM_h, h));
    const auto image = d_map(LinearCombination::term(Basis::SYM_h, h));
    std::vector<Integer> row;
    for (const auto& s : simples) row.push_back(detail::require_integer(image.coefficient(to_label(s.ribbon()))));
    m.entries.push_back(std::move(row));
  }
  return m;
}

/// Rows are multipartitions, columns simples; entry = coefficient of F_col
/// in d(s_lambda(1)(X_1) ... s_lambda(r)(X_r)).
inline LabeledMatrix decomposition_matrix(int n, int r) {
  const auto simples = all_simples(n, r);
  LabeledMatrix m;
  m.cols = simple_labels_text(simples);
  for (const auto& mp : enumerate_multipartitions(n, r)) {
    m.rows.push_back(format_multipartition(mp));
    const auto image = d_map(multipartition_class(mp));
    std::vector<Integer> row;
    for (const auto& s : simples) row.push_back(detail::require_integer(image.coefficient(to_label(s.ribbon()))));
    m.entries.push_back(std::move(row));
  }
  return m;
}

/// Plain integer matrix product, labels taken from the outer factors.
inline LabeledMatrix multiply(const LabeledMatrix& a, const LabeledMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix labels do not chain");
  LabeledMatrix out{a.rows, b.cols, {}};
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    std::vector<Integer> row(b.cols.size(), 0);
    for (std::size_t k = 0; k < a.cols.size(); ++k) {
      if (a.entries[i][k] == 0) continue;
      for (std::size_t j = 0; j < b.cols.size(); ++j) row[j] += a.entries[i][k] * b.entries[k][j];
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

}  // namespace cycloribbon
