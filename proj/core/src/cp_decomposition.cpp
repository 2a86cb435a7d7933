// Copyright 2026 The entkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entkit/cp_decomposition.hpp"

#include <cmath>

#include "entkit/errors.hpp"
#include "entkit/random.hpp"

namespace entkit {

namespace {

// Khatri-Rao product of all factors except `skip`, party order preserved:
// KR[(..j_p..), i] = prod_p U_p(j_p, i).
Eigen::MatrixXcd khatri_rao_except(const std::vector<Eigen::MatrixXcd>& factors, int skip) {
  const int rank = static_cast<int>(factors[0].cols());
  Eigen::MatrixXcd kr = Eigen::MatrixXcd::Ones(1, rank);
  for (int p = 0; p < static_cast<int>(factors.size()); ++p) {
    if (p == skip) continue;
    const auto& u = factors[static_cast<std::size_t>(p)];
    Eigen::MatrixXcd next(kr.rows() * u.rows(), rank);
    for (Eigen::Index a = 0; a < kr.rows(); ++a) {
      for (Eigen::Index b = 0; b < u.rows(); ++b) {
        next.row(a * u.rows() + b) = kr.row(a).cwiseProduct(u.row(b));
      }
    }
    kr = std::move(next);
  }
  return kr;
}

// Mode-k unfolding: rows = party k, columns = remaining parties in order.
Eigen::MatrixXcd unfold(const Eigen::VectorXcd& t, const SystemShape& shape, int k) {
  const int d = shape.dim(k);
  const std::int64_t inner = shape.stride(k);
  const std::int64_t outer = shape.total_dim() / (d * inner);
  Eigen::MatrixXcd m(d, outer * inner);
  for (std::int64_t o = 0; o < outer; ++o) {
    for (int c = 0; c < d; ++c) {
      m.block(c, o * inner, 1, inner) = t.segment((o * d + c) * inner, inner).transpose();
    }
  }
  return m;
}

Eigen::VectorXcd reconstruct_from_factors(const std::vector<Eigen::MatrixXcd>& factors,
                                          const SystemShape& shape) {
  const int rank = static_cast<int>(factors[0].cols());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(shape.total_dim());
  for (int i = 0; i < rank; ++i) {
    Eigen::VectorXcd term = factors[0].col(i);
    for (std::size_t p = 1; p < factors.size(); ++p) {
      const Eigen::VectorXcd& f = factors[p].col(i);
      Eigen::VectorXcd next(term.size() * f.size());
      for (Eigen::Index a = 0; a < term.size(); ++a) {
        next.segment(a * f.size(), f.size()) = term(a) * f;
      }
      term = std::move(next);
    }
    out += term;
  }
  return out;
}

double max_column_norm(const std::vector<Eigen::MatrixXcd>& factors) {
  double m = 0.0;
  for (const auto& u : factors) {
    for (Eigen::Index i = 0; i < u.cols(); ++i) {
      m = std::max(m, u.col(i).norm());
    }
  }
  return m;
}

}  // namespace

Eigen::VectorXcd CpDecomposition::reconstruct() const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(shape.total_dim());
  for (const auto& term : terms) {
    Eigen::VectorXcd v = term.factors[0];
    for (std::size_t p = 1; p < term.factors.size(); ++p) {
      const Eigen::VectorXcd& f = term.factors[p];
      Eigen::VectorXcd next(v.size() * f.size());
      for (Eigen::Index a = 0; a < v.size(); ++a) {
        next.segment(a * f.size(), f.size()) = v(a) * f;
      }
      v = std::move(next);
    }
    out += term.weight * v;
  }
  return out;
}

namespace {

// Splits a flattened product vector into unit per-party factors by repeated
// rank-one extraction; returns false when some reshaping is not rank one.
bool split_product_vector(const Eigen::VectorXcd& row, const std::vector<int>& dims,
                          std::vector<Eigen::VectorXcd>* factors, Complex* weight) {
  Eigen::VectorXcd tail = row;
  factors->clear();
  for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
    const int d = dims[k];
    const std::int64_t rest = tail.size() / d;
    Eigen::MatrixXcd m(d, rest);
    for (int a = 0; a < d; ++a) {
      m.row(a) = tail.segment(a * rest, rest).transpose();
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(0) <= 0.0) return false;
    if (sv.size() > 1 && sv(1) > 1e-7 * sv(0)) return false;
    factors->push_back(svd.matrixU().col(0));
    tail = sv(0) * svd.matrixV().col(0).conjugate();
  }
  const double n = tail.norm();
  if (n <= 0.0) return false;
  factors->push_back(tail / n);
  *weight = Complex(n, 0.0);
  return true;
}

std::optional<CpDecomposition> cp_exact_bipartite(const PureState& s, int rank) {
  const Eigen::MatrixXcd m = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                                            Eigen::RowMajor>>(
      s.amps().data(), s.shape().dim(0), s.shape().dim(1));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (rank < sv.size() && sv(rank) > 1e-12 * sv(0)) return std::nullopt;  // rank too small
  CpDecomposition out;
  out.shape = s.shape();
  const int terms = std::min<int>(rank, static_cast<int>(sv.size()));
  for (int i = 0; i < terms; ++i) {
    if (sv(i) <= 1e-15 * sv(0)) break;
    CpTerm term;
    term.weight = Complex(sv(i), 0.0);
    term.factors.push_back(svd.matrixU().col(i));
    term.factors.push_back(svd.matrixV().col(i).conjugate());
    out.terms.push_back(std::move(term));
  }
  if (out.terms.empty()) return std::nullopt;
  if ((out.reconstruct() - s.amps()).norm() > 1e-11) return std::nullopt;
  return out;
}

}  // namespace

std::optional<CpDecomposition> cp_exact(const PureState& s, int rank) {
  const SystemShape& shape = s.shape();
  const int n = shape.party_count();
  if (rank < 1) return std::nullopt;
  if (n == 1) {
    if (rank < 1) return std::nullopt;
    CpDecomposition out;
    out.shape = shape;
    CpTerm term;
    term.weight = Complex(s.amps().norm(), 0.0);
    term.factors.push_back(s.amps() / s.amps().norm());
    out.terms.push_back(std::move(term));
    return out;
  }
  if (n == 2) return cp_exact_bipartite(s, rank);

  // Eigenvector-pencil route: pick an axis `a` with d_a >= rank and a second
  // group B (here: one party) with d_b >= rank; contract the rest with two
  // fixed vectors and diagonalize M_x pinv(M_y).
  for (int a = 0; a < n; ++a) {
    if (shape.dim(a) < rank) continue;
    for (int b = 0; b < n; ++b) {
      if (b == a || shape.dim(b) < rank) continue;

      std::vector<int> rest;
      for (int k = 0; k < n; ++k) {
        if (k != a && k != b) rest.push_back(k);
      }
      std::int64_t rest_dim = 1;
      for (int k : rest) rest_dim *= shape.dim(k);
      if (rest_dim < 2) continue;

      // deterministic contraction vectors
      std::mt19937_64 eng(0x9e3779b97f4a7c15ULL);
      std::normal_distribution<double> dist(0.0, 1.0);
      Eigen::VectorXcd x(rest_dim), y(rest_dim);
      for (std::int64_t i = 0; i < rest_dim; ++i) x(i) = Complex(dist(eng), dist(eng));
      for (std::int64_t i = 0; i < rest_dim; ++i) y(i) = Complex(dist(eng), dist(eng));

      const int da = shape.dim(a);
      const int db = shape.dim(b);
      Eigen::MatrixXcd mx = Eigen::MatrixXcd::Zero(da, db);
      Eigen::MatrixXcd my = Eigen::MatrixXcd::Zero(da, db);
      std::vector<int> multi(static_cast<std::size_t>(n));
      for (std::int64_t i = 0; i < shape.total_dim(); ++i) {
        const auto mi = shape.multi_index(i);
        std::int64_t r = 0;
        for (int k : rest) r = r * shape.dim(k) + mi[static_cast<std::size_t>(k)];
        const Complex amp = s.amp(i);
        mx(mi[static_cast<std::size_t>(a)], mi[static_cast<std::size_t>(b)]) += amp * x(r);
        my(mi[static_cast<std::size_t>(a)], mi[static_cast<std::size_t>(b)]) += amp * y(r);
      }

      Eigen::JacobiSVD<Eigen::MatrixXcd> psvd(my, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const auto& psv = psvd.singularValues();
      if (psv(std::min<int>(rank, static_cast<int>(psv.size())) - 1) <= 1e-10 * psv(0)) continue;
      Eigen::VectorXd inv = psv;
      for (Eigen::Index i = 0; i < inv.size(); ++i) {
        inv(i) = psv(i) > 1e-12 * psv(0) ? 1.0 / psv(i) : 0.0;
      }
      const Eigen::MatrixXcd pinv_my =
          psvd.matrixV() * inv.asDiagonal() * psvd.matrixU().adjoint();
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(mx * pinv_my);
      if (es.info() != Eigen::Success) continue;

      // take the `rank` largest eigenvalues; demand separation
      std::vector<int> order(static_cast<std::size_t>(da));
      for (int i = 0; i < da; ++i) order[static_cast<std::size_t>(i)] = i;
      std::sort(order.begin(), order.end(), [&](int l, int r) {
        return std::abs(es.eigenvalues()(l)) > std::abs(es.eigenvalues()(r));
      });
      double scale = std::abs(es.eigenvalues()(order[0]));
      if (scale <= 0.0) continue;
      bool separated = true;
      for (int i = 0; i < rank && separated; ++i) {
        for (int j = i + 1; j < rank; ++j) {
          if (std::abs(es.eigenvalues()(order[static_cast<std::size_t>(i)]) -
                       es.eigenvalues()(order[static_cast<std::size_t>(j)])) < 1e-8 * scale) {
            separated = false;
            break;
          }
        }
      }
      if (!separated) continue;

      Eigen::MatrixXcd ua(da, rank);
      for (int i = 0; i < rank; ++i) {
        ua.col(i) = es.eigenvectors().col(order[static_cast<std::size_t>(i)]);
      }
      Eigen::JacobiSVD<Eigen::MatrixXcd> usvd(ua, Eigen::ComputeThinU | Eigen::ComputeThinV);
      if (usvd.singularValues()(rank - 1) <= 1e-8 * usvd.singularValues()(0)) continue;

      // rows of pinv(U_a) * unfold_a(T) are the flattened remaining products
      const std::int64_t cols = shape.total_dim() / da;
      Eigen::MatrixXcd ta(da, cols);
      std::vector<int> other;
      for (int k = 0; k < n; ++k) {
        if (k != a) other.push_back(k);
      }
      for (std::int64_t i = 0; i < shape.total_dim(); ++i) {
        const auto mi = shape.multi_index(i);
        std::int64_t c = 0;
        for (int k : other) c = c * shape.dim(k) + mi[static_cast<std::size_t>(k)];
        ta(mi[static_cast<std::size_t>(a)], c) = s.amp(i);
      }
      Eigen::VectorXd uinv = usvd.singularValues();
      for (Eigen::Index i = 0; i < uinv.size(); ++i) uinv(i) = 1.0 / uinv(i);
      const Eigen::MatrixXcd rows =
          (usvd.matrixV() * uinv.asDiagonal() * usvd.matrixU().adjoint()) * ta;

      std::vector<int> other_dims;
      for (int k : other) other_dims.push_back(shape.dim(k));

      CpDecomposition out;
      out.shape = shape;
      bool ok = true;
      for (int i = 0; i < rank && ok; ++i) {
        std::vector<Eigen::VectorXcd> rest_factors;
        Complex weight;
        if (!split_product_vector(rows.row(i).transpose(), other_dims, &rest_factors, &weight)) {
          ok = false;
          break;
        }
        CpTerm term;
        term.weight = weight;
        term.factors.resize(static_cast<std::size_t>(n));
        term.factors[static_cast<std::size_t>(a)] = ua.col(i);
        for (std::size_t j = 0; j < other.size(); ++j) {
          term.factors[static_cast<std::size_t>(other[j])] = rest_factors[j];
        }
        out.terms.push_back(std::move(term));
      }
      if (!ok) continue;
      if ((out.reconstruct() - s.amps()).norm() > 1e-10) continue;
      return out;
    }
  }
  return std::nullopt;
}

bool escape_signature(double residual, double tol, double cancellation, double baseline) {
  return residual >= tol && residual < 0.2 && cancellation > 1.5 * baseline;
}

CpFit cp_fit(const PureState& s, int rank, const AlsOptions& opts) {
  if (rank < 1) {
    throw ShapeError("cp_fit needs rank >= 1");
  }
  const SystemShape& shape = s.shape();
  const int n = shape.party_count();
  const Eigen::VectorXcd& target = s.amps();

  // closed-form route first: exact certificates for the generic cases
  if (auto exact = cp_exact(s, rank)) {
    CpFit fit;
    fit.residual = (exact->reconstruct() - target).norm();
    if (fit.residual < opts.tol) {
      fit.converged = true;
      double mx = 0.0;
      for (const auto& t : exact->terms) {
        mx = std::max(mx, std::pow(std::abs(t.weight), 1.0 / static_cast<double>(n)));
      }
      fit.max_factor_norm = mx;
      fit.decomposition = std::move(*exact);
      while (fit.decomposition.rank() < rank) {
        // pad with zero terms so the term count matches the requested rank
        CpTerm zero;
        zero.weight = Complex(0, 0);
        for (int k = 0; k < n; ++k) {
          Eigen::VectorXcd e = Eigen::VectorXcd::Zero(shape.dim(k));
          e(0) = Complex(1, 0);
          zero.factors.push_back(std::move(e));
        }
        fit.decomposition.terms.push_back(std::move(zero));
      }
      return fit;
    }
  }

  CpFit best;
  best.residual = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
    auto eng = seeded_engine(opts.seed, static_cast<std::uint64_t>(restart));
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<Eigen::MatrixXcd> factors;
    factors.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      Eigen::MatrixXcd u(shape.dim(k), rank);
      for (Eigen::Index r = 0; r < u.rows(); ++r) {
        for (Eigen::Index c = 0; c < u.cols(); ++c) {
          u(r, c) = Complex(dist(eng), dist(eng));
        }
      }
      factors.push_back(std::move(u));
    }

    std::vector<double> res_traj;
    std::vector<double> norm_traj;
    res_traj.reserve(static_cast<std::size_t>(opts.max_sweeps));
    double restart_best = std::numeric_limits<double>::infinity();
    std::vector<Eigen::MatrixXcd> restart_best_factors;
    bool hit_tol = false;
    int polish_left = 80;

    for (int sweep = 0; sweep < opts.max_sweeps + 80; ++sweep) {
      for (int k = 0; k < n; ++k) {
        const Eigen::MatrixXcd kr = khatri_rao_except(factors, k);
        const Eigen::MatrixXcd tk = unfold(target, shape, k);
        // min || tk^T - kr * X ||, U_k = X^T
        factors[static_cast<std::size_t>(k)] =
            kr.colPivHouseholderQr().solve(tk.transpose()).transpose();
      }
      const double res = (reconstruct_from_factors(factors, shape) - target).norm();
      res_traj.push_back(res);
      norm_traj.push_back(max_column_norm(factors));
      if (res < restart_best) {
        restart_best = res;
        restart_best_factors = factors;
      }

      if (res < opts.tol) {
        // polish: keep sweeping toward machine level so downstream checks
        // with tighter tolerances accept the certificate
        hit_tol = true;
        if (res < 1e-12 || --polish_left <= 0) break;
        const std::size_t m = res_traj.size();
        if (m >= 2 && res > 0.9 * res_traj[m - 2]) break;
        continue;
      }
      if (hit_tol) break;  // drifted back above tol: keep the recorded best
      if (sweep >= opts.max_sweeps - 1) break;
      // hard-plateau break: no movement in 50 sweeps
      const std::size_t m = res_traj.size();
      if (m > 60 && std::abs(res_traj[m - 51] - res) < 1e-13 * std::max(1.0, res)) break;
    }

    if (restart_best < best.residual) {
      best.residual = restart_best;
      best.max_factor_norm = max_column_norm(restart_best_factors);
      best.residual_trajectory = res_traj;
      best.norm_trajectory = norm_traj;
      best.decomposition.shape = shape;
      best.decomposition.terms.clear();
      for (int i = 0; i < rank; ++i) {
        CpTerm term;
        double w = 1.0;
        for (int k = 0; k < n; ++k) {
          Eigen::VectorXcd col = restart_best_factors[static_cast<std::size_t>(k)].col(i);
          const double cn = col.norm();
          w *= cn;
          term.factors.push_back(cn > 0.0 ? Eigen::VectorXcd(col / cn) : col);
        }
        term.weight = Complex(w, 0.0);
        best.decomposition.terms.push_back(std::move(term));
      }
    }
    if (best.residual < opts.tol && best.max_factor_norm <= opts.norm_cap) break;
  }

  best.converged = best.residual < opts.tol && best.max_factor_norm <= opts.norm_cap;
  double max_term = 0.0;
  for (const auto& t : best.decomposition.terms) {
    max_term = std::max(max_term, std::abs(t.weight));
  }
  best.border_escape =
      !best.converged && escape_signature(best.residual, opts.tol, max_term, target.norm());
  return best;
}

}  // namespace entkit
