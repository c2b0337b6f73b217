#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lilrates {

enum class Statistic { Max, Abs };

std::string to_string(Statistic s);

// Step survival function fitted from Monte Carlo samples of M_n or |S_n|
// at a fixed walk length (see walks.hpp / fit_empirical_tail).  Thresholds
// are in the walk's own units.  tail(x) is right-continuous, nonincreasing,
// 1 at and below zero, and exactly 0 above the last fitted threshold.
class EmpiricalTail {
 public:
  EmpiricalTail(std::int64_t n, Statistic statistic,
                std::vector<double> thresholds, std::vector<double> prob,
                std::vector<double> std_err, std::int64_t paths);

  double tail(double x) const;

  std::int64_t walk_length() const { return n_; }
  Statistic statistic() const { return statistic_; }
  std::int64_t paths() const { return paths_; }
  double support_end() const { return thresholds_.back(); }
  const std::vector<double>& thresholds() const { return thresholds_; }
  const std::vector<double>& probabilities() const { return prob_; }
  const std::vector<double>& std_errors() const { return std_err_; }

 private:
  std::int64_t n_;
  Statistic statistic_;
  std::vector<double> thresholds_;
  std::vector<double> prob_;
  std::vector<double> std_err_;
  std::int64_t paths_;
};

enum class TailKind { AbsNormal, SupWiener, EmpiricalMC };

std::string to_string(TailKind k);

// A tail-probability function x -> P(Z >= x) for Z in {|N|, sup|W|,
// empirical Monte Carlo}.  Evaluation is defined for all real x, with
// tail(x) = 1 for x <= 0 (these are tails of nonnegative statistics).
class TailModel {
 public:
  static TailModel abs_normal();
  static TailModel sup_wiener(double series_tol = 1e-13);
  static TailModel empirical(std::shared_ptr<const EmpiricalTail> table);

  TailKind kind() const { return kind_; }
  bool analytic() const { return kind_ != TailKind::EmpiricalMC; }

  // Max for SupWiener (the M_n route), Abs for AbsNormal (the |S_n|
  // route); for EmpiricalMC, whatever statistic the table was fitted on.
  Statistic statistic() const;

  double tail(double x) const;

  // log tail(x); analytic kinds only.  Stable far past double underflow.
  double log_tail(double x) const;

  const EmpiricalTail* table() const { return table_.get(); }

 private:
  TailModel(TailKind kind, double tol, std::shared_ptr<const EmpiricalTail> table)
      : kind_(kind), series_tol_(tol), table_(std::move(table)) {}

  TailKind kind_;
  double series_tol_;
  std::shared_ptr<const EmpiricalTail> table_;
};

}  // namespace lilrates
