#include "epitome/lasso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace epitome {

void LassoSettings::validate(long p) const {
  if (!(lambda >= 0.0)) throw std::invalid_argument("LassoSettings: lambda must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("LassoSettings: tol must be > 0");
  if (max_nonzeros < 0 || max_nonzeros > p)
    throw std::invalid_argument("LassoSettings: max_nonzeros out of range");
}

namespace {

// Cholesky factor of gram[active, active], grown one atom at a time and
// rebuilt from scratch after a drop (drops are rare on the lasso path).
class ActiveFactor {
 public:
  explicit ActiveFactor(int capacity) : l_(capacity, capacity), k_(0) {}

  int size() const { return k_; }

  bool push(const Eigen::MatrixXd& gram, const std::vector<int>& active, int j) {
    const double gjj = gram(j, j);
    if (k_ == 0) {
      if (gjj <= 0.0) return false;
      l_(0, 0) = std::sqrt(gjj);
    } else {
      Eigen::VectorXd w(k_);
      for (int i = 0; i < k_; ++i) w[i] = gram(active[static_cast<size_t>(i)], j);
      l_.topLeftCorner(k_, k_).triangularView<Eigen::Lower>().solveInPlace(w);
      const double schur = gjj - w.squaredNorm();
      if (schur <= 1e-12 * std::max(gjj, 1e-300)) return false;  // dependent atom
      l_.row(k_).head(k_) = w.transpose();
      l_(k_, k_) = std::sqrt(schur);
    }
    ++k_;
    return true;
  }

  void rebuild(const Eigen::MatrixXd& gram, const std::vector<int>& active) {
    k_ = 0;
    for (int j : active)
      if (!push(gram, active, j))
        throw std::runtime_error("lasso: active gram lost positive definiteness");
  }

  // Solve gram[active,active] * out = rhs.
  Eigen::VectorXd solve(Eigen::VectorXd rhs) const {
    l_.topLeftCorner(k_, k_).triangularView<Eigen::Lower>().solveInPlace(rhs);
    l_.topLeftCorner(k_, k_).transpose().triangularView<Eigen::Upper>().solveInPlace(rhs);
    return rhs;
  }

 private:
  Eigen::MatrixXd l_;
  int k_;
};

struct PathState {
  std::vector<int> active;
  std::vector<double> sign;
  std::vector<double> coef;
  std::vector<char> is_active;
  std::vector<char> blocked;
};

SparseCode finish(const PathState& st, const ActiveFactor& chol, const Eigen::VectorXd& corr,
                  double lam_end, long p) {
  SparseCode out;
  out.dim = static_cast<int>(p);
  const int k = static_cast<int>(st.active.size());
  if (k == 0) return out;

  // Polish: solve the stationarity system gram_SS a = corr_S - lam*sign_S
  // exactly on the final support, removing drift accumulated along the path.
  Eigen::VectorXd rhs(k);
  for (int i = 0; i < k; ++i)
    rhs[i] = corr[st.active[static_cast<size_t>(i)]] - lam_end * st.sign[static_cast<size_t>(i)];
  Eigen::VectorXd polished = chol.solve(rhs);

  double scale = 0.0;
  for (int i = 0; i < k; ++i) scale = std::max(scale, std::abs(polished[i]));
  bool sign_ok = true;
  for (int i = 0; i < k; ++i)
    if (polished[i] * st.sign[static_cast<size_t>(i)] < -1e-9 * scale) sign_ok = false;

  std::vector<std::pair<int, double>> entries;
  entries.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double v = sign_ok ? polished[i] : st.coef[static_cast<size_t>(i)];
    if (std::abs(v) > 1e-15 * std::max(scale, 1e-300))
      entries.emplace_back(st.active[static_cast<size_t>(i)], v);
  }
  std::sort(entries.begin(), entries.end());
  for (auto& [j, v] : entries) {
    out.indices.push_back(j);
    out.values.push_back(v);
  }
  return out;
}

}  // namespace

SparseCode lasso_path(const Eigen::MatrixXd& gram, const Eigen::VectorXd& corr,
                      const LassoSettings& s) {
  const long p = gram.cols();
  if (gram.rows() != p || corr.size() != p)
    throw std::invalid_argument("lasso_path: gram/correlation shape mismatch");
  s.validate(p);
  const int cap = s.max_nonzeros == 0 ? static_cast<int>(p) : s.max_nonzeros;

  SparseCode zero;
  zero.dim = static_cast<int>(p);

  Eigen::VectorXd c = corr;
  Eigen::Index j0;
  const double lam_max = c.size() ? c.cwiseAbs().maxCoeff(&j0) : 0.0;
  if (!(lam_max > s.lambda)) return zero;

  const double scale = std::max(lam_max, 1e-300);
  const double event_tol = 1e-13 * scale;

  PathState st;
  st.is_active.assign(static_cast<size_t>(p), 0);
  st.blocked.assign(static_cast<size_t>(p), 0);
  ActiveFactor chol(std::min<long>(cap + 1, p));

  auto add_atom = [&](int j) {
    if (!chol.push(gram, st.active, j)) {
      st.blocked[static_cast<size_t>(j)] = 1;
      return false;
    }
    st.active.push_back(j);
    st.sign.push_back(c[j] >= 0 ? 1.0 : -1.0);
    st.coef.push_back(0.0);
    st.is_active[static_cast<size_t>(j)] = 1;
    return true;
  };

  double lam_t = lam_max;
  int last_dropped = -1;
  add_atom(static_cast<int>(j0));

  const int max_steps = 200 + 32 * cap;
  for (int step = 0; step < max_steps; ++step) {
    if (st.active.empty()) {
      // Everything was dropped; restart from the strongest remaining atom.
      int jn = -1;
      double best = s.lambda + event_tol;
      for (long j = 0; j < p; ++j)
        if (!st.blocked[static_cast<size_t>(j)] && std::abs(c[j]) > best) {
          best = std::abs(c[j]);
          jn = static_cast<int>(j);
        }
      if (jn < 0) break;
      lam_t = std::abs(c[jn]);
      add_atom(jn);
      continue;
    }

    const int k = static_cast<int>(st.active.size());
    Eigen::VectorXd sgn(k);
    for (int i = 0; i < k; ++i) sgn[i] = st.sign[static_cast<size_t>(i)];
    Eigen::VectorXd dir = chol.solve(sgn);

    // Degenerate entry: a zero coefficient whose direction immediately leaves
    // its sign orthant. Remove and block it, then recompute the direction.
    {
      bool degenerate = false;
      for (int i = k - 1; i >= 0; --i) {
        if (st.coef[static_cast<size_t>(i)] == 0.0 &&
            dir[i] * st.sign[static_cast<size_t>(i)] <= 0.0) {
          const int atom = st.active[static_cast<size_t>(i)];
          st.active.erase(st.active.begin() + i);
          st.sign.erase(st.sign.begin() + i);
          st.coef.erase(st.coef.begin() + i);
          st.is_active[static_cast<size_t>(atom)] = 0;
          st.blocked[static_cast<size_t>(atom)] = 1;
          degenerate = true;
        }
      }
      if (degenerate) {
        if (!st.active.empty()) chol.rebuild(gram, st.active);
        continue;
      }
    }

    // Correlation velocity of every atom along the direction.
    Eigen::VectorXd vel = Eigen::VectorXd::Zero(p);
    for (int i = 0; i < k; ++i) vel += dir[i] * gram.col(st.active[static_cast<size_t>(i)]);

    enum class Event { Target, Join, Drop };
    Event event = Event::Target;
    double gamma = lam_t - s.lambda;
    int who = -1;

    for (long j = 0; j < p; ++j) {
      if (st.is_active[static_cast<size_t>(j)] || st.blocked[static_cast<size_t>(j)]) continue;
      const double dplus = 1.0 - vel[j];
      const double dminus = 1.0 + vel[j];
      for (int side = 0; side < 2; ++side) {
        const double den = side == 0 ? dplus : dminus;
        if (den <= 1e-12) continue;
        double g = side == 0 ? (lam_t - c[j]) / den : (lam_t + c[j]) / den;
        if (g < -event_tol) continue;
        if (g < 0) g = 0;
        if (j == last_dropped && g <= event_tol) continue;  // anti-cycling
        if (g < gamma - event_tol) {
          gamma = g;
          event = Event::Join;
          who = static_cast<int>(j);
        }
      }
    }
    for (int i = 0; i < k; ++i) {
      if (dir[i] == 0.0) continue;
      const double g = -st.coef[static_cast<size_t>(i)] / dir[i];
      if (g > event_tol && g < gamma - event_tol) {
        gamma = g;
        event = Event::Drop;
        who = i;
      }
    }

    for (int i = 0; i < k; ++i) st.coef[static_cast<size_t>(i)] += gamma * dir[i];
    c -= gamma * vel;
    lam_t -= gamma;
    last_dropped = -1;

    if (event == Event::Target) break;
    if (event == Event::Join) {
      if (k >= cap) break;  // path truncated by the support cap
      add_atom(who);
    } else {
      const int atom = st.active[static_cast<size_t>(who)];
      st.active.erase(st.active.begin() + who);
      st.sign.erase(st.sign.begin() + who);
      st.coef.erase(st.coef.begin() + who);
      st.is_active[static_cast<size_t>(atom)] = 0;
      last_dropped = atom;
      std::fill(st.blocked.begin(), st.blocked.end(), 0);
      if (!st.active.empty()) chol.rebuild(gram, st.active);
    }
  }

  return finish(st, chol, corr, lam_t, p);
}

SparseCode lasso(const Eigen::VectorXd& x, const Eigen::MatrixXd& d, const LassoSettings& s) {
  if (x.size() != d.rows()) throw std::invalid_argument("lasso: signal/dictionary size mismatch");
  if (!x.allFinite() || !d.allFinite()) throw std::invalid_argument("lasso: non-finite input");
  LassoSettings eff = s;
  if (eff.max_nonzeros == 0) eff.max_nonzeros = static_cast<int>(std::min(d.rows(), d.cols()));
  const Eigen::MatrixXd gram = d.transpose() * d;
  const Eigen::VectorXd corr = d.transpose() * x;
  return lasso_path(gram, corr, eff);
}

SparseCode weighted_lasso(const Eigen::VectorXd& x, const Eigen::MatrixXd& d,
                          const LassoSettings& s) {
  if (x.size() != d.rows()) throw std::invalid_argument("weighted_lasso: size mismatch");
  if (!x.allFinite() || !d.allFinite())
    throw std::invalid_argument("weighted_lasso: non-finite input");
  const Eigen::VectorXd norms = d.colwise().norm();
  if ((norms.array() <= 0.0).any())
    throw std::invalid_argument("weighted_lasso: zero column norm (drop the atom first)");
  const Eigen::MatrixXd rescaled = d * norms.cwiseInverse().asDiagonal();
  LassoSettings eff = s;
  if (eff.max_nonzeros == 0) eff.max_nonzeros = static_cast<int>(std::min(d.rows(), d.cols()));
  SparseCode code = lasso(x, rescaled, eff);
  for (size_t i = 0; i < code.values.size(); ++i)
    code.values[i] /= norms[code.indices[i]];
  return code;
}

double lasso_objective(const Eigen::VectorXd& x, const Eigen::MatrixXd& d, const SparseCode& a,
                       double lambda) {
  return 0.5 * (x - a.reconstruct(d)).squaredNorm() + lambda * a.l1_norm();
}

double weighted_lasso_objective(const Eigen::VectorXd& x, const Eigen::MatrixXd& d,
                                const SparseCode& a, double lambda) {
  double penalty = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i)
    penalty += d.col(a.indices[i]).norm() * std::abs(a.values[i]);
  return 0.5 * (x - a.reconstruct(d)).squaredNorm() + lambda * penalty;
}

}  // namespace epitome
