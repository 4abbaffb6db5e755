#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace discretion::audit {

// Calendar days as a count since 1970-01-01.
using Date = std::int32_t;

Date make_date(int year, int month, int day);
Date parse_date(const std::string& iso);  // YYYY-MM-DD
std::string date_to_string(Date date);
int month_of(Date date);          // 1..12
int weekday_of(Date date);        // 0 = Sunday .. 6 = Saturday

enum class DayType { Monday, Midweek, Weekend };
DayType day_type_of(Date date);
std::string to_string(DayType type);

enum class Placement { ES, TH };
Placement placement_from_string(const std::string& label);
std::string to_string(Placement placement);

struct DecisionRecord {
  Date date;
  Placement predicted;
  Placement actual;
};

struct ExitCounts {
  double es = 0.0;
  double th = 0.0;
};
using ExitSeries = std::map<Date, ExitCounts>;
using HolidaySet = std::set<Date>;

// One modeling day. Directional counts partition the disagreements:
// y_up are ES recommendations placed in TH, y_down the reverse.
// Operational features use only days strictly before this one.
struct DayRow {
  Date date = 0;
  int n = 0, n_es = 0, n_th = 0;
  int y_all = 0, y_up = 0, y_down = 0;
  double th_share_lag1 = 0.0;
  bool holiday = false;
  DayType day_type = DayType::Midweek;
  int month = 1;
  // 7-day rolling sums over [t-7, t-1]: ES/TH assignments, ES/TH exits.
  double es_assign_7d = 0.0, th_assign_7d = 0.0;
  double es_exit_7d = 0.0, th_exit_7d = 0.0;
  // Prior-calendar-week totals (Monday..Sunday), same ordering.
  std::optional<std::array<double, 4>> block;
};

struct DailyPanel {
  std::vector<DayRow> rows;
};

// Features are built on the full calendar between the first and last record
// date, then days with no eligible cases are dropped.
DailyPanel aggregate_daily(std::vector<DecisionRecord> records,
                           const HolidaySet& holidays = {},
                           const ExitSeries* exits = nullptr);

enum class Outcome { All, Up, Down };
enum class StateFeatures { Rolling, Block };
enum class DaySpec { ThreeLevel, FullWeek };

Outcome outcome_from_string(const std::string& label);
StateFeatures state_from_string(const std::string& label);

struct Design {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;       // successes
  Eigen::VectorXd trials;  // binomial trial counts, also the weights
  std::vector<std::string> names;
  std::vector<std::string> degenerate_columns;  // constant-zero columns
  int rows_used = 0;
  int rows_dropped = 0;  // empty trial sets for a directional outcome
};

// Fixed column order: intercept; day-type (or day-of-week) indicators;
// 11 month indicators (October reference); lagged TH share; holiday; four
// operational state features.
Design build_design(const DailyPanel& panel, Outcome outcome,
                    StateFeatures state, DaySpec day_spec = DaySpec::ThreeLevel);

struct GlmFit {
  Eigen::VectorXd beta;
  Eigen::MatrixXd covariance;
  double deviance = 0.0;
  std::vector<double> deviance_history;  // per accepted iteration
  int iterations = 0;
  bool converged = false;
  bool separated = false;
  std::vector<std::string> names;
};

// Binomial-logit maximum likelihood via iteratively reweighted least
// squares with step halving, so the deviance never increases.
GlmFit irls_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                const Eigen::VectorXd& trials,
                std::vector<std::string> names = {});

struct WaldRow {
  std::string term;
  double estimate = 0.0;
  double std_err = 0.0;
  double odds_ratio = 1.0;
  double ci_low = 1.0;
  double ci_high = 1.0;
  double p_value = 1.0;
};

// Odds ratios with 95% intervals and two-sided normal p-values. Refuses a
// fit that did not converge.
std::vector<WaldRow> wald_report(const GlmFit& fit);

struct SynthConfig {
  int n_days = 1500;
  std::uint64_t seed = 1;
  Date start = 0;  // defaults to 2010-01-01 when zero
  double base_volume = 6.0;
  double th_predicted_share = 0.35;
  HolidaySet holidays;  // defaults to a small fixed synthetic set
};

struct SynthResult {
  DailyPanel panel;
  std::vector<DecisionRecord> records;
  ExitSeries exits;
  HolidaySet holidays;
};

// Simulates daily volumes, autoregressive operational state, calendar
// features, and binomial override outcomes from a known coefficient vector
// (three-level day-type design order). The same coefficients drive both
// override directions; the overall count is their sum by construction.
SynthResult synth_generate(const Eigen::VectorXd& true_coeffs,
                           const SynthConfig& cfg);

// Coefficients used by the command-line generator and the recovery tests.
Eigen::VectorXd default_synth_coefficients();
std::vector<std::string> design_column_names(DaySpec day_spec,
                                             StateFeatures state);

// --- fixed CSV schemas ---
std::string panel_to_csv(const DailyPanel& panel);
DailyPanel panel_from_csv(const std::string& text);
std::string records_to_csv(const std::vector<DecisionRecord>& records);
std::vector<DecisionRecord> records_from_csv(const std::string& text);
std::string exits_to_csv(const ExitSeries& exits);
ExitSeries exits_from_csv(const std::string& text);
HolidaySet holidays_from_text(const std::string& text);  // one date per line

}  // namespace discretion::audit
