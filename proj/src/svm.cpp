#include "stressdet/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "stressdet/rng.hpp"

namespace stressdet {

namespace {

void check_training_input(const Eigen::MatrixXd& x, const Eigen::VectorXi& y) {
  if (x.rows() == 0 || y.size() != x.rows()) {
    throw SchemaError("svm: inconsistent training input sizes");
  }
  if ((y.array() > 0).count() == 0 || (y.array() < 0).count() == 0) {
    throw TrainingError("svm needs both classes in the training set");
  }
}

SvmModel collect_model(const Eigen::MatrixXd& x, const Eigen::VectorXi& y,
                       const Eigen::VectorXd& alpha, const KernelSpec& spec,
                       double bias) {
  std::vector<Eigen::Index> sv;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    if (alpha[i] > 0.0) sv.push_back(i);
  }
  SvmModel model;
  model.kernel = spec;
  model.bias = bias;
  model.support_vectors.resize(static_cast<Eigen::Index>(sv.size()), x.cols());
  model.dual_coefs.resize(static_cast<Eigen::Index>(sv.size()));
  for (std::size_t k = 0; k < sv.size(); ++k) {
    model.support_vectors.row(static_cast<Eigen::Index>(k)) = x.row(sv[k]);
    model.dual_coefs[static_cast<Eigen::Index>(k)] = alpha[sv[k]] * y[sv[k]];
  }
  return model;
}

// Bounded LRU cache of RBF kernel rows keyed by training-row index.
class KernelRowCache {
 public:
  KernelRowCache(const Eigen::MatrixXd& x, double gamma, std::size_t max_rows)
      : x_(x), sq_norms_(x.rowwise().squaredNorm()), gamma_(gamma),
        max_rows_(std::max<std::size_t>(2, max_rows)) {}

  const Eigen::VectorXd& row(Eigen::Index i) {
    auto it = cache_.find(i);
    if (it != cache_.end()) {
      it->second.last_used = ++clock_;
      return it->second.values;
    }
    if (cache_.size() >= max_rows_) evict_oldest();
    Entry e;
    e.values = (-gamma_ * (sq_norms_.array() - 2.0 * (x_ * x_.row(i).transpose()).array() +
                           sq_norms_[i]))
                   .exp()
                   .matrix();
    e.last_used = ++clock_;
    return cache_.emplace(i, std::move(e)).first->second.values;
  }

 private:
  struct Entry {
    Eigen::VectorXd values;
    std::uint64_t last_used = 0;
  };

  void evict_oldest() {
    auto oldest = cache_.begin();
    for (auto it = cache_.begin(); it != cache_.end(); ++it) {
      if (it->second.last_used < oldest->second.last_used) oldest = it;
    }
    cache_.erase(oldest);
  }

  const Eigen::MatrixXd& x_;
  Eigen::VectorXd sq_norms_;
  double gamma_;
  std::size_t max_rows_;
  std::uint64_t clock_ = 0;
  std::unordered_map<Eigen::Index, Entry> cache_;
};

}  // namespace

double kernel_value(const KernelSpec& spec, const Eigen::VectorXd& a,
                    const Eigen::VectorXd& b) {
  switch (spec.kind) {
    case KernelSpec::Kind::kLinear:
      return a.dot(b);
    case KernelSpec::Kind::kRbf:
      return std::exp(-spec.gamma * (a - b).squaredNorm());
  }
  return 0.0;
}

SvmModel train_linear_svm(const Eigen::MatrixXd& features, const Eigen::VectorXi& y,
                          double C, const SvmTrainOptions& options) {
  check_training_input(features, y);
  if (C <= 0.0) throw ConfigError("svm: C must be > 0");

  const Eigen::Index n = features.rows();
  const Eigen::Index d = features.cols();

  // bias handled as an implicit constant feature of value 1
  Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
  double wb = 0.0;
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd qii(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    qii[i] = features.row(i).squaredNorm() + 1.0;
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(0x11eaf);  // fixed shuffle stream, training is fully deterministic

  double violation = 0.0;
  for (long epoch = 0; epoch < options.max_epochs; ++epoch) {
    rng.shuffle(perm);
    violation = 0.0;
    for (int pi : perm) {
      const Eigen::Index i = pi;
      const double yi = static_cast<double>(y[i]);
      const double g = yi * (features.row(i).dot(w) + wb) - 1.0;

      double pg = g;
      if (alpha[i] <= 0.0) {
        pg = std::min(g, 0.0);
      } else if (alpha[i] >= C) {
        pg = std::max(g, 0.0);
      }
      violation = std::max(violation, std::abs(pg));
      if (pg == 0.0) continue;

      const double next = std::clamp(alpha[i] - g / qii[i], 0.0, C);
      const double delta = next - alpha[i];
      if (delta == 0.0) continue;
      alpha[i] = next;
      w += delta * yi * features.row(i).transpose();
      wb += delta * yi;
    }
    if (violation < options.tolerance) {
      return collect_model(features, y, alpha, {KernelSpec::Kind::kLinear, C, 0.0}, wb);
    }
  }

  std::ostringstream msg;
  msg << "linear svm did not converge in " << options.max_epochs
      << " epochs (last max violation " << violation << ", tolerance "
      << options.tolerance << ", C " << C << ", n " << n << ")";
  throw ConvergenceError(msg.str());
}

SvmModel train_linear_svm(const LabeledDataset& train, double C,
                          const SvmTrainOptions& options) {
  train.validate_for_training();
  return train_linear_svm(train.features, train.signs(), C, options);
}

SvmModel train_rbf_svm(const Eigen::MatrixXd& features, const Eigen::VectorXi& y,
                       const KernelSpec& spec, const SvmTrainOptions& options) {
  check_training_input(features, y);
  spec.validate();
  if (spec.kind != KernelSpec::Kind::kRbf) {
    throw ConfigError("train_rbf_svm requires an rbf kernel spec");
  }

  const Eigen::Index n = features.rows();
  const double C = spec.C;

  // keep the row cache under ~256 MB
  const auto cache_rows = static_cast<std::size_t>(
      std::max<Eigen::Index>(64, std::min(n, static_cast<Eigen::Index>(
                                                 256'000'000 / (8 * std::max<Eigen::Index>(1, n))))));
  KernelRowCache cache(features, spec.gamma, cache_rows);

  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd grad = Eigen::VectorXd::Constant(n, -1.0);

  const long max_iter =
      options.max_iterations > 0 ? options.max_iterations
                                 : std::max<long>(200000, 200 * static_cast<long>(n));

  double gap = 0.0;
  for (long iter = 0; iter < max_iter; ++iter) {
    // maximal violating pair
    Eigen::Index i = -1, j = -1;
    double m_up = -std::numeric_limits<double>::infinity();
    double m_low = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < n; ++k) {
      const double v = -static_cast<double>(y[k]) * grad[k];
      const bool in_up = (y[k] > 0 && alpha[k] < C) || (y[k] < 0 && alpha[k] > 0.0);
      const bool in_low = (y[k] > 0 && alpha[k] > 0.0) || (y[k] < 0 && alpha[k] < C);
      if (in_up && v > m_up) {
        m_up = v;
        i = k;
      }
      if (in_low && v < m_low) {
        m_low = v;
        j = k;
      }
    }
    gap = m_up - m_low;
    if (i < 0 || j < 0 || gap <= options.tolerance) {
      // bias from the free vectors, midpoint of the violating bounds otherwise
      double b_sum = 0.0;
      long b_count = 0;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (alpha[k] > 0.0 && alpha[k] < C) {
          b_sum += -static_cast<double>(y[k]) * grad[k];
          ++b_count;
        }
      }
      const double bias = b_count > 0 ? b_sum / static_cast<double>(b_count)
                                      : 0.5 * (m_up + m_low);
      return collect_model(features, y, alpha, spec, bias);
    }

    const Eigen::VectorXd& ki = cache.row(i);
    const Eigen::VectorXd& kj = cache.row(j);
    const double eta = std::max(ki[i] + kj[j] - 2.0 * ki[j], 1e-12);

    double step = gap / eta;
    const double room_i = y[i] > 0 ? C - alpha[i] : alpha[i];
    const double room_j = y[j] > 0 ? alpha[j] : C - alpha[j];
    step = std::min({step, room_i, room_j});

    alpha[i] += static_cast<double>(y[i]) * step;
    alpha[j] -= static_cast<double>(y[j]) * step;
    grad.array() += step * (ki - kj).array() * y.cast<double>().array();
  }

  std::ostringstream msg;
  msg << "smo did not converge in " << max_iter << " iterations (last gap " << gap
      << ", tolerance " << options.tolerance << ", C " << C << ", gamma "
      << spec.gamma << ", n " << n << ")";
  throw ConvergenceError(msg.str());
}

SvmModel train_rbf_svm(const LabeledDataset& train, const KernelSpec& spec,
                       const SvmTrainOptions& options) {
  train.validate_for_training();
  return train_rbf_svm(train.features, train.signs(), spec, options);
}

double svm_decision(const SvmModel& model, const Eigen::VectorXd& x) {
  if (x.size() != model.support_vectors.cols() && model.support_vectors.rows() > 0) {
    throw SchemaError("svm decision: input dimension mismatch");
  }
  double sum = model.bias;
  for (Eigen::Index i = 0; i < model.support_vectors.rows(); ++i) {
    sum += model.dual_coefs[i] *
           kernel_value(model.kernel, model.support_vectors.row(i).transpose(), x);
  }
  return sum;
}

Eigen::VectorXd svm_decisions(const SvmModel& model, const Eigen::MatrixXd& features) {
  if (model.support_vectors.rows() == 0) {
    return Eigen::VectorXd::Constant(features.rows(), model.bias);
  }
  if (features.cols() != model.support_vectors.cols()) {
    throw SchemaError("svm decision: input dimension mismatch");
  }
  switch (model.kernel.kind) {
    case KernelSpec::Kind::kLinear: {
      const Eigen::VectorXd w = model.support_vectors.transpose() * model.dual_coefs;
      return (features * w).array() + model.bias;
    }
    case KernelSpec::Kind::kRbf: {
      const Eigen::VectorXd f_sq = features.rowwise().squaredNorm();
      const Eigen::VectorXd s_sq = model.support_vectors.rowwise().squaredNorm();
      Eigen::MatrixXd dist = -2.0 * features * model.support_vectors.transpose();
      dist.colwise() += f_sq;
      dist.rowwise() += s_sq.transpose();
      return ((-model.kernel.gamma * dist.array()).exp().matrix() * model.dual_coefs)
                 .array() +
             model.bias;
    }
  }
  return Eigen::VectorXd::Zero(features.rows());
}

Label predict_svm(const SvmModel& model, const Eigen::VectorXd& x) {
  return svm_decision(model, x) > 0.0 ? Label::kStress : Label::kNeutral;
}

std::vector<Label> predict_svm(const SvmModel& model, const Eigen::MatrixXd& features) {
  const Eigen::VectorXd dec = svm_decisions(model, features);
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(dec.size()));
  for (Eigen::Index i = 0; i < dec.size(); ++i) {
    out.push_back(dec[i] > 0.0 ? Label::kStress : Label::kNeutral);
  }
  return out;
}

}  // namespace stressdet
