#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "distcomm/corpus.hpp"
#include "distcomm/error.hpp"

namespace distcomm {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Aggregated journal-journal citations; counts(i, j) is the number of
/// citations journal i gives to journal j.
struct JournalCitationMatrix {
  std::vector<std::string> journals;
  CountMatrix counts;

  std::optional<std::size_t> index_of(const std::string& journal) const {
    auto it = std::find(journals.begin(), journals.end(), journal);
    if (it == journals.end()) return std::nullopt;
    return static_cast<std::size_t>(it - journals.begin());
  }
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line, std::size_t lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (quoted) throw InputError("citation matrix line " + std::to_string(lineno) + ": unterminated quote");
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace detail

/// CSV with a header row of journal names (first cell ignored) and one row
/// per citing journal: name, then integer counts in header order. Rows may
/// appear in any order but must cover exactly the header journals.
inline JournalCitationMatrix parse_citation_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    auto fields = detail::split_csv_line(line, lineno);
    for (auto& f : fields) f = std::string(detail::trim(f));
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) throw InputError("citation matrix is empty");

  JournalCitationMatrix m;
  m.journals.assign(rows[0].begin() + 1, rows[0].end());
  const auto n = m.journals.size();
  if (n == 0) throw InputError("citation matrix header names no journals");
  std::unordered_map<std::string, std::size_t> col;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.journals[j].empty()) throw InputError("citation matrix header has an empty journal name");
    if (!col.emplace(m.journals[j], j).second) {
      throw InputError("citation matrix header repeats journal '" + m.journals[j] + "'");
    }
  }
  if (rows.size() - 1 != n) {
    throw InputError("citation matrix has " + std::to_string(rows.size() - 1) + " rows for " +
                     std::to_string(n) + " journals");
  }
  m.counts = CountMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<bool> seen(n, false);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& fields = rows[r];
    if (fields.size() != n + 1) {
      throw InputError("citation matrix row '" + fields[0] + "' has " +
                       std::to_string(fields.size() - 1) + " counts, expected " + std::to_string(n));
    }
    auto it = col.find(fields[0]);
    if (it == col.end()) throw InputError("citation matrix row names unknown journal '" + fields[0] + "'");
    if (seen[it->second]) throw InputError("citation matrix repeats row '" + fields[0] + "'");
    seen[it->second] = true;
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = 0;
      std::size_t used = 0;
      try {
        v = std::stoll(fields[j + 1], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != fields[j + 1].size() || fields[j + 1].empty() || v < 0) {
        throw InputError("citation matrix cell (" + fields[0] + ", " + m.journals[j] +
                         ") is not a non-negative integer: '" + fields[j + 1] + "'");
      }
      m.counts(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return m;
}

inline void write_citation_matrix(std::ostream& out, const JournalCitationMatrix& m) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q.push_back('"');
      q.push_back(c);
    }
    return q + "\"";
  };
  out << "citing\\cited";
  for (const auto& j : m.journals) out << ',' << quote(j);
  out << '\n';
  for (Eigen::Index i = 0; i < m.counts.rows(); ++i) {
    out << quote(m.journals[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < m.counts.cols(); ++j) out << ',' << m.counts(i, j);
    out << '\n';
  }
}

/// Journals citing or cited by `seed` at no less than `threshold` of the
/// seed's total citations received (resp. given). The seed is always
/// included. Returned in matrix order.
inline std::vector<std::string> environment(const JournalCitationMatrix& m, const std::string& seed,
                                            double threshold) {
  const auto s = m.index_of(seed);
  if (!s) throw InputError("seed journal '" + seed + "' not in citation matrix");
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw InputError("threshold must be in (0, 1]");
  }
  const auto si = static_cast<Eigen::Index>(*s);
  const double given = static_cast<double>(m.counts.row(si).sum());
  const double received = static_cast<double>(m.counts.col(si).sum());
  if (given == 0.0 && received == 0.0) {
    throw InputError("seed journal '" + seed + "' has no citations given or received");
  }
  // Inclusive boundary; the slack absorbs rounding in threshold * total only.
  auto reaches = [&](std::int64_t count, double total) {
    if (total == 0.0) return false;
    const double cut = threshold * total;
    return static_cast<double>(count) >= cut - 1e-9 * std::max(1.0, cut);
  };
  std::vector<std::string> env;
  for (Eigen::Index j = 0; j < m.counts.rows(); ++j) {
    if (j == si || reaches(m.counts(j, si), received) || reaches(m.counts(si, j), given)) {
      env.push_back(m.journals[static_cast<std::size_t>(j)]);
    }
  }
  return env;
}

/// Pearson correlations between the citing profiles (rows) of the `env`
/// journals, restricted to the `env` columns. A constant row correlates 0
/// with every other row.
inline Eigen::MatrixXd correlation_matrix(const JournalCitationMatrix& m,
                                          const std::vector<std::string>& env) {
  if (env.size() < 2) throw InputError("correlation_matrix: environment needs at least 2 journals");
  std::vector<Eigen::Index> idx;
  for (const auto& j : env) {
    auto i = m.index_of(j);
    if (!i) throw InputError("journal '" + j + "' not in citation matrix");
    idx.push_back(static_cast<Eigen::Index>(*i));
  }
  const auto n = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd profile(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      profile(r, c) = static_cast<double>(m.counts(idx[static_cast<std::size_t>(r)],
                                                   idx[static_cast<std::size_t>(c)]));
    }
  }
  Eigen::VectorXd mean = profile.rowwise().mean();
  Eigen::MatrixXd centered = profile.colwise() - mean;
  Eigen::VectorXd norm = centered.rowwise().norm();
  Eigen::MatrixXd corr = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      double r = 0.0;
      if (norm(a) > 0.0 && norm(b) > 0.0) {
        r = centered.row(a).dot(centered.row(b)) / (norm(a) * norm(b));
        r = std::clamp(r, -1.0, 1.0);
      }
      corr(a, b) = corr(b, a) = r;
    }
  }
  return corr;
}

struct SymmetricEigen {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // column k pairs with values(k)
  int sweeps = 0;
};

/// Cyclic Jacobi eigendecomposition. Sweeps until every off-diagonal entry
/// is below `off_tol` in magnitude.
inline SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& input, double off_tol = 1e-10,
                                   int max_sweeps = 100) {
  const auto n = input.rows();
  if (input.cols() != n) throw InputError("jacobi_eigen: matrix is not square");
  Eigen::MatrixXd a = input;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  auto max_off = [&] {
    double worst = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) worst = std::max(worst, std::abs(a(p, q)));
    }
    return worst;
  };

  SymmetricEigen out;
  while (max_off() >= off_tol) {
    if (out.sweeps == max_sweeps) {
      throw DegenerateError("jacobi_eigen: no convergence after " + std::to_string(max_sweeps) +
                            " sweeps");
    }
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

struct FactorModel {
  std::vector<std::string> journals;
  Eigen::VectorXd all_eigenvalues;     // full spectrum, descending
  Eigen::VectorXd eigenvalues;         // retained factors
  Eigen::MatrixXd loadings;            // journals x retained factors
  std::vector<double> explained_variance;
  std::vector<std::size_t> assignment;  // journal -> factor
  bool rotated = false;

  std::size_t factor_count() const { return static_cast<std::size_t>(loadings.cols()); }
};

namespace detail {

// Flips each factor so its largest-magnitude loading is positive.
inline void orient_factors(Eigen::MatrixXd& loadings) {
  for (Eigen::Index f = 0; f < loadings.cols(); ++f) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < loadings.rows(); ++i) {
      if (std::abs(loadings(i, f)) > std::abs(loadings(best, f))) best = i;
    }
    if (loadings(best, f) < 0.0) loadings.col(f) *= -1.0;
  }
}

inline std::vector<std::size_t> assign_by_max_loading(const Eigen::MatrixXd& loadings) {
  std::vector<std::size_t> out(static_cast<std::size_t>(loadings.rows()), 0);
  for (Eigen::Index i = 0; i < loadings.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index f = 1; f < loadings.cols(); ++f) {
      if (std::abs(loadings(i, f)) > std::abs(loadings(i, best))) best = f;
    }
    out[static_cast<std::size_t>(i)] = static_cast<std::size_t>(best);
  }
  return out;
}

inline std::vector<double> column_variance_share(const Eigen::MatrixXd& loadings, double trace) {
  std::vector<double> out;
  for (Eigen::Index f = 0; f < loadings.cols(); ++f) {
    out.push_back(trace > 0.0 ? loadings.col(f).squaredNorm() / trace : 0.0);
  }
  return out;
}

}  // namespace detail

/// Principal-component extraction on a correlation matrix, keeping factors
/// whose eigenvalue reaches `criterion` (Kaiser rule at the default 1.0).
inline FactorModel principal_factors(const Eigen::MatrixXd& corr, std::vector<std::string> journals,
                                     double criterion = 1.0) {
  const auto n = corr.rows();
  if (corr.cols() != n || n == 0) throw InputError("principal_factors: matrix is not square");
  if (static_cast<std::size_t>(n) != journals.size()) {
    throw InputError("principal_factors: label count does not match matrix size");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(corr(i, j) - corr(j, i)) > 1e-9) {
        throw InputError("principal_factors: matrix is not symmetric");
      }
    }
  }
  const auto eig = jacobi_eigen(corr);
  Eigen::Index kept = 0;
  while (kept < n && eig.values(kept) >= criterion - 1e-12) ++kept;
  if (kept == 0) {
    throw InputError("principal_factors: no eigenvalue reaches " + std::to_string(criterion) +
                     " (largest is " + std::to_string(eig.values(0)) + "); lower the criterion");
  }

  FactorModel model;
  model.journals = std::move(journals);
  model.all_eigenvalues = eig.values;
  model.eigenvalues = eig.values.head(kept);
  model.loadings.resize(n, kept);
  for (Eigen::Index f = 0; f < kept; ++f) {
    model.loadings.col(f) = eig.vectors.col(f) * std::sqrt(std::max(eig.values(f), 0.0));
  }
  detail::orient_factors(model.loadings);
  const double trace = eig.values.sum();
  for (Eigen::Index f = 0; f < kept; ++f) model.explained_variance.push_back(eig.values(f) / trace);
  model.assignment = detail::assign_by_max_loading(model.loadings);
  return model;
}

/// Raw varimax criterion: sum over factors of the variance of squared loadings.
inline double varimax_criterion(const Eigen::MatrixXd& loadings) {
  const double p = static_cast<double>(loadings.rows());
  double v = 0.0;
  for (Eigen::Index f = 0; f < loadings.cols(); ++f) {
    const Eigen::ArrayXd sq = loadings.col(f).array().square();
    v += sq.square().sum() / p - std::pow(sq.sum() / p, 2);
  }
  return v;
}

struct VarimaxResult {
  Eigen::MatrixXd loadings;
  Eigen::MatrixXd rotation;        // loadings = input * rotation
  std::vector<double> criterion;   // before the first sweep, then after each
};

/// Varimax by pairwise planar rotations (Kaiser's closed-form angle), swept
/// until a sweep improves the criterion by less than `tol`.
inline VarimaxResult varimax(const Eigen::MatrixXd& input, double tol = 1e-8, int max_sweeps = 100) {
  VarimaxResult out{input, Eigen::MatrixXd::Identity(input.cols(), input.cols()), {}};
  out.criterion.push_back(varimax_criterion(input));
  const auto k = input.cols();
  if (k < 2) return out;
  const double p = static_cast<double>(input.rows());
  auto& l = out.loadings;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    for (Eigen::Index a = 0; a < k - 1; ++a) {
      for (Eigen::Index b = a + 1; b < k; ++b) {
        const Eigen::ArrayXd x = l.col(a).array();
        const Eigen::ArrayXd y = l.col(b).array();
        const Eigen::ArrayXd u = x.square() - y.square();
        const Eigen::ArrayXd w = 2.0 * x * y;
        const double su = u.sum();
        const double sw = w.sum();
        const double num = 2.0 * (u * w).sum() - 2.0 * su * sw / p;
        const double den = (u.square() - w.square()).sum() - (su * su - sw * sw) / p;
        const double phi = 0.25 * std::atan2(num, den);
        if (std::abs(phi) < 1e-15) continue;
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        const Eigen::VectorXd la = l.col(a);
        const Eigen::VectorXd lb = l.col(b);
        l.col(a) = c * la + s * lb;
        l.col(b) = -s * la + c * lb;
        const Eigen::VectorXd ra = out.rotation.col(a);
        const Eigen::VectorXd rb = out.rotation.col(b);
        out.rotation.col(a) = c * ra + s * rb;
        out.rotation.col(b) = -s * ra + c * rb;
      }
    }
    out.criterion.push_back(varimax_criterion(l));
    const auto last = out.criterion.size() - 1;
    if (out.criterion[last] - out.criterion[last - 1] < tol) break;
  }
  return out;
}

/// Replaces the model's loadings by their varimax rotation and recomputes
/// orientation, explained variance and assignment.
inline FactorModel rotate(FactorModel model, double tol = 1e-8, int max_sweeps = 100) {
  model.loadings = varimax(model.loadings, tol, max_sweeps).loadings;
  detail::orient_factors(model.loadings);
  model.explained_variance = detail::column_variance_share(model.loadings, model.all_eigenvalues.sum());
  model.assignment = detail::assign_by_max_loading(model.loadings);
  model.rotated = true;
  return model;
}

/// Journal with the largest absolute loading on `factor`. Ties go to the
/// higher impact value when impacts are given, then to the
/// lexicographically first name.
inline std::string central_tendency(const FactorModel& model, std::size_t factor,
                                    const std::map<std::string, double>* impacts = nullptr) {
  if (factor >= model.factor_count()) {
    throw InputError("central_tendency: factor " + std::to_string(factor) + " out of range (" +
                     std::to_string(model.factor_count()) + " factors)");
  }
  constexpr double kTie = 1e-12;
  auto impact = [&](const std::string& j) {
    if (impacts == nullptr) return 0.0;
    auto it = impacts->find(j);
    return it == impacts->end() ? 0.0 : it->second;
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < model.journals.size(); ++i) {
    const double cur = std::abs(model.loadings(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(factor)));
    const double top = std::abs(model.loadings(static_cast<Eigen::Index>(best), static_cast<Eigen::Index>(factor)));
    if (cur > top + kTie) {
      best = i;
    } else if (cur >= top - kTie) {
      const double ci = impact(model.journals[i]);
      const double bi = impact(model.journals[best]);
      if (ci > bi || (ci == bi && model.journals[i] < model.journals[best])) best = i;
    }
  }
  return model.journals[best];
}

}  // namespace distcomm
