#include "lilrates/tail_model.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "lilrates/special_functions.hpp"

namespace lilrates {

std::string to_string(Statistic s) { return s == Statistic::Max ? "max" : "abs"; }

std::string to_string(TailKind k) {
  switch (k) {
    case TailKind::AbsNormal: return "absnormal";
    case TailKind::SupWiener: return "supwiener";
    case TailKind::EmpiricalMC: return "empirical";
  }
  return "?";
}

EmpiricalTail::EmpiricalTail(std::int64_t n, Statistic statistic,
                             std::vector<double> thresholds,
                             std::vector<double> prob,
                             std::vector<double> std_err, std::int64_t paths)
    : n_(n),
      statistic_(statistic),
      thresholds_(std::move(thresholds)),
      prob_(std::move(prob)),
      std_err_(std::move(std_err)),
      paths_(paths) {
  if (thresholds_.empty() || thresholds_.size() != prob_.size() ||
      thresholds_.size() != std_err_.size()) {
    throw std::invalid_argument("EmpiricalTail: inconsistent table sizes");
  }
  if (!std::is_sorted(thresholds_.begin(), thresholds_.end())) {
    throw std::invalid_argument("EmpiricalTail: thresholds must be ascending");
  }
  for (std::size_t i = 0; i < prob_.size(); ++i) {
    if (prob_[i] < 0.0 || prob_[i] > 1.0)
      throw std::invalid_argument("EmpiricalTail: probability outside [0,1]");
    if (i > 0 && prob_[i] > prob_[i - 1])
      throw std::invalid_argument("EmpiricalTail: probabilities must be nonincreasing");
  }
}

double EmpiricalTail::tail(double x) const {
  if (x <= 0.0) return 1.0;
  if (x > thresholds_.back()) return 0.0;
  const auto it = std::lower_bound(thresholds_.begin(), thresholds_.end(), x);
  return prob_[static_cast<std::size_t>(it - thresholds_.begin())];
}

TailModel TailModel::abs_normal() {
  return TailModel(TailKind::AbsNormal, 0.0, nullptr);
}

TailModel TailModel::sup_wiener(double series_tol) {
  return TailModel(TailKind::SupWiener, series_tol, nullptr);
}

TailModel TailModel::empirical(std::shared_ptr<const EmpiricalTail> table) {
  if (!table) throw std::invalid_argument("TailModel::empirical: null table");
  return TailModel(TailKind::EmpiricalMC, 0.0, std::move(table));
}

Statistic TailModel::statistic() const {
  switch (kind_) {
    case TailKind::AbsNormal: return Statistic::Abs;
    case TailKind::SupWiener: return Statistic::Max;
    case TailKind::EmpiricalMC: return table_->statistic();
  }
  return Statistic::Abs;
}

double TailModel::tail(double x) const {
  if (x <= 0.0) return 1.0;
  switch (kind_) {
    case TailKind::AbsNormal: return abs_normal_tail(x);
    case TailKind::SupWiener: return sup_wiener_tail(x, series_tol_);
    case TailKind::EmpiricalMC: return table_->tail(x);
  }
  return 0.0;
}

double TailModel::log_tail(double x) const {
  if (x <= 0.0) return 0.0;
  switch (kind_) {
    case TailKind::AbsNormal:
      return std::numbers::ln2 + log_normal_upper_tail(x);
    case TailKind::SupWiener:
      return log_sup_wiener_tail(x);
    case TailKind::EmpiricalMC:
      throw std::invalid_argument("TailModel::log_tail: analytic models only");
  }
  return 0.0;
}

}  // namespace lilrates
