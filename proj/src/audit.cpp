#include "discretion/audit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "discretion/io.hpp"
#include "discretion/rng.hpp"
#include "discretion/shape.hpp"

namespace discretion::audit {

namespace {

constexpr const char* kPanelHeader =
    "date,n,n_es,n_th,y_all,y_up,y_down,th_share_lag1,is_holiday,day_type,"
    "month,es_assign_7d,th_assign_7d,es_exit_7d,th_exit_7d";

double sigmoid(double eta) {
  if (eta > 30.0) eta = 30.0;
  if (eta < -30.0) eta = -30.0;
  return 1.0 / (1.0 + std::exp(-eta));
}

int poisson_draw(double lambda, RngStream& rng) {
  // Knuth inversion; all rates in this module are small.
  const double limit = std::exp(-lambda);
  int k = 0;
  double prod = rng.uniform();
  while (prod > limit) {
    ++k;
    prod *= rng.uniform();
  }
  return k;
}

int binomial_draw(int n, double prob, RngStream& rng) {
  int successes = 0;
  for (int i = 0; i < n; ++i) {
    if (rng.uniform() < prob) ++successes;
  }
  return successes;
}

double binom_deviance(const Eigen::VectorXd& y, const Eigen::VectorXd& n,
                      const Eigen::VectorXd& mu) {
  double dev = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const double yi = y(i);
    const double ni = n(i);
    const double fit = ni * mu(i);
    if (yi > 0.0) dev += yi * std::log(yi / fit);
    if (ni - yi > 0.0) dev += (ni - yi) * std::log((ni - yi) / (ni - fit));
  }
  return 2.0 * dev;
}

Date monday_of_week(Date d) {
  const int wd = weekday_of(d);           // 0 = Sunday
  const int since_monday = (wd + 6) % 7;  // Monday -> 0
  return d - since_monday;
}

}  // namespace

Date make_date(int year, int month, int day) {
  using namespace std::chrono;
  const year_month_day ymd{std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
                           std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok()) throw std::invalid_argument("invalid calendar date");
  return static_cast<Date>(sys_days{ymd}.time_since_epoch().count());
}

Date parse_date(const std::string& iso) {
  int y = 0, m = 0, d = 0;
  if (std::sscanf(iso.c_str(), "%d-%d-%d", &y, &m, &d) != 3) {
    throw std::invalid_argument("expected YYYY-MM-DD date, got: " + iso);
  }
  return make_date(y, m, d);
}

std::string date_to_string(Date date) {
  using namespace std::chrono;
  const year_month_day ymd{sys_days{days{date}}};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

int month_of(Date date) {
  using namespace std::chrono;
  const year_month_day ymd{sys_days{days{date}}};
  return static_cast<int>(static_cast<unsigned>(ymd.month()));
}

int weekday_of(Date date) {
  using namespace std::chrono;
  const weekday wd{sys_days{days{date}}};
  return static_cast<int>(wd.c_encoding());
}

DayType day_type_of(Date date) {
  const int wd = weekday_of(date);
  if (wd == 1) return DayType::Monday;
  if (wd == 0 || wd == 6) return DayType::Weekend;
  return DayType::Midweek;
}

std::string to_string(DayType type) {
  switch (type) {
    case DayType::Monday: return "Mon";
    case DayType::Midweek: return "Tue-Fri";
    case DayType::Weekend: return "Weekend";
  }
  return "?";
}

Placement placement_from_string(const std::string& label) {
  if (label == "ES" || label == "es") return Placement::ES;
  if (label == "TH" || label == "th") return Placement::TH;
  throw std::invalid_argument("unknown placement label: " + label);
}

std::string to_string(Placement placement) {
  return placement == Placement::ES ? "ES" : "TH";
}

Outcome outcome_from_string(const std::string& label) {
  if (label == "all") return Outcome::All;
  if (label == "up") return Outcome::Up;
  if (label == "down") return Outcome::Down;
  throw std::invalid_argument("unknown outcome: " + label);
}

StateFeatures state_from_string(const std::string& label) {
  if (label == "roll" || label == "rolling") return StateFeatures::Rolling;
  if (label == "block") return StateFeatures::Block;
  throw std::invalid_argument("unknown state feature set: " + label);
}

DailyPanel aggregate_daily(std::vector<DecisionRecord> records,
                           const HolidaySet& holidays,
                           const ExitSeries* exits) {
  DailyPanel panel;
  if (records.empty()) return panel;
  std::sort(records.begin(), records.end(),
            [](const DecisionRecord& a, const DecisionRecord& b) {
              return a.date < b.date;
            });
  const Date first = records.front().date;
  const Date last = records.back().date;
  const int span = static_cast<int>(last - first) + 1;

  struct DayCounts {
    int n = 0, n_es = 0, n_th = 0, y_all = 0, y_up = 0, y_down = 0;
    int actual_es = 0, actual_th = 0;
    double exit_es = 0.0, exit_th = 0.0;
  };
  std::vector<DayCounts> days(span);
  for (const auto& rec : records) {
    DayCounts& d = days[rec.date - first];
    ++d.n;
    if (rec.predicted == Placement::ES) ++d.n_es; else ++d.n_th;
    if (rec.actual == Placement::ES) ++d.actual_es; else ++d.actual_th;
    if (rec.predicted != rec.actual) {
      ++d.y_all;
      if (rec.predicted == Placement::ES) ++d.y_up; else ++d.y_down;
    }
  }
  if (exits) {
    for (const auto& [date, counts] : *exits) {
      if (date < first || date > last) continue;
      days[date - first].exit_es = counts.es;
      days[date - first].exit_th = counts.th;
    }
  }

  const auto window_sum = [&](int idx, int len, auto&& get) {
    double acc = 0.0;
    for (int j = idx - len; j < idx; ++j) {
      if (j >= 0 && j < span) acc += get(days[j]);
    }
    return acc;
  };

  for (int idx = 0; idx < span; ++idx) {
    const DayCounts& d = days[idx];
    if (d.n == 0) continue;
    const Date date = first + idx;
    DayRow row;
    row.date = date;
    row.n = d.n;
    row.n_es = d.n_es;
    row.n_th = d.n_th;
    row.y_all = d.y_all;
    row.y_up = d.y_up;
    row.y_down = d.y_down;
    if (idx >= 1 && days[idx - 1].n > 0) {
      row.th_share_lag1 = static_cast<double>(days[idx - 1].actual_th) /
                          static_cast<double>(days[idx - 1].n);
    }
    row.holiday = holidays.count(date) > 0;
    row.day_type = day_type_of(date);
    row.month = month_of(date);
    row.es_assign_7d = window_sum(idx, 7, [](const DayCounts& c) {
      return static_cast<double>(c.actual_es);
    });
    row.th_assign_7d = window_sum(idx, 7, [](const DayCounts& c) {
      return static_cast<double>(c.actual_th);
    });
    row.es_exit_7d =
        window_sum(idx, 7, [](const DayCounts& c) { return c.exit_es; });
    row.th_exit_7d =
        window_sum(idx, 7, [](const DayCounts& c) { return c.exit_th; });

    const Date week_start = monday_of_week(date) - 7;
    std::array<double, 4> block{0.0, 0.0, 0.0, 0.0};
    for (Date wd = week_start; wd < week_start + 7; ++wd) {
      const int j = static_cast<int>(wd - first);
      if (j < 0 || j >= span) continue;
      block[0] += days[j].actual_es;
      block[1] += days[j].actual_th;
      block[2] += days[j].exit_es;
      block[3] += days[j].exit_th;
    }
    row.block = block;
    panel.rows.push_back(row);
  }
  return panel;
}

std::vector<std::string> design_column_names(DaySpec day_spec,
                                             StateFeatures state) {
  std::vector<std::string> names{"intercept"};
  if (day_spec == DaySpec::ThreeLevel) {
    names.push_back("day_mon");
    names.push_back("day_weekend");
  } else {
    for (const char* d : {"day_tue", "day_wed", "day_thu", "day_fri",
                          "day_sat", "day_sun"}) {
      names.push_back(d);
    }
  }
  for (int m : {1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12}) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "month_%02d", m);
    names.push_back(buf);
  }
  names.push_back("th_share_lag1");
  names.push_back("is_holiday");
  const char* suffix = state == StateFeatures::Rolling ? "7d" : "wk";
  for (const char* base : {"es_assign_", "th_assign_", "es_exit_", "th_exit_"}) {
    names.push_back(std::string(base) + suffix);
  }
  return names;
}

Design build_design(const DailyPanel& panel, Outcome outcome,
                    StateFeatures state, DaySpec day_spec) {
  Design design;
  design.names = design_column_names(day_spec, state);
  const int cols = static_cast<int>(design.names.size());

  std::vector<const DayRow*> rows;
  for (const auto& row : panel.rows) {
    const int trials = outcome == Outcome::All
                           ? row.n
                           : (outcome == Outcome::Up ? row.n_es : row.n_th);
    if (trials <= 0) {
      ++design.rows_dropped;
      continue;
    }
    if (state == StateFeatures::Block && !row.block) {
      throw std::invalid_argument(
          "panel has no weekly block features; rebuild it from records");
    }
    rows.push_back(&row);
  }
  if (rows.empty()) {
    throw std::invalid_argument("no eligible days for this outcome");
  }

  design.rows_used = static_cast<int>(rows.size());
  design.X = Eigen::MatrixXd::Zero(design.rows_used, cols);
  design.y = Eigen::VectorXd::Zero(design.rows_used);
  design.trials = Eigen::VectorXd::Zero(design.rows_used);

  static const std::array<int, 11> month_order{1, 2, 3, 4, 5, 6,
                                               7, 8, 9, 11, 12};
  for (int i = 0; i < design.rows_used; ++i) {
    const DayRow& row = *rows[i];
    int c = 0;
    design.X(i, c++) = 1.0;
    if (day_spec == DaySpec::ThreeLevel) {
      design.X(i, c++) = row.day_type == DayType::Monday ? 1.0 : 0.0;
      design.X(i, c++) = row.day_type == DayType::Weekend ? 1.0 : 0.0;
    } else {
      const int wd = weekday_of(row.date);  // Monday is the reference
      for (int d = 2; d <= 6; ++d) design.X(i, c++) = wd == d ? 1.0 : 0.0;
      design.X(i, c++) = wd == 0 ? 1.0 : 0.0;  // Sunday
    }
    for (int m : month_order) design.X(i, c++) = row.month == m ? 1.0 : 0.0;
    design.X(i, c++) = row.th_share_lag1;
    design.X(i, c++) = row.holiday ? 1.0 : 0.0;
    const std::array<double, 4> feats =
        state == StateFeatures::Rolling
            ? std::array<double, 4>{row.es_assign_7d, row.th_assign_7d,
                                    row.es_exit_7d, row.th_exit_7d}
            : *row.block;
    for (double f : feats) design.X(i, c++) = f;

    if (outcome == Outcome::All) {
      design.y(i) = row.y_all;
      design.trials(i) = row.n;
    } else if (outcome == Outcome::Up) {
      design.y(i) = row.y_up;
      design.trials(i) = row.n_es;
    } else {
      design.y(i) = row.y_down;
      design.trials(i) = row.n_th;
    }
  }

  for (int c = 1; c < cols; ++c) {
    if (design.X.col(c).cwiseAbs().maxCoeff() == 0.0) {
      design.degenerate_columns.push_back(design.names[c]);
    }
  }
  return design;
}

GlmFit irls_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                const Eigen::VectorXd& trials, std::vector<std::string> names) {
  const Eigen::Index rows = X.rows();
  const Eigen::Index cols = X.cols();
  if (rows < cols) {
    throw std::invalid_argument("need at least as many days as coefficients");
  }
  if (y.size() != rows || trials.size() != rows) {
    throw std::invalid_argument("design, outcome, and trial sizes disagree");
  }
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (trials(i) < 1.0 || y(i) < 0.0 || y(i) > trials(i)) {
      throw std::invalid_argument("each day needs 0 <= successes <= trials "
                                  "with at least one trial");
    }
  }

  GlmFit fit;
  fit.names = std::move(names);

  const auto mean_vec = [&](const Eigen::VectorXd& beta) {
    Eigen::VectorXd mu(rows);
    const Eigen::VectorXd eta = X * beta;
    for (Eigen::Index i = 0; i < rows; ++i) mu(i) = sigmoid(eta(i));
    return mu;
  };
  const auto info_matrix = [&](const Eigen::VectorXd& mu) {
    Eigen::VectorXd w(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
      w(i) = std::max(trials(i) * mu(i) * (1.0 - mu(i)), 1e-12);
    }
    return std::pair<Eigen::MatrixXd, Eigen::VectorXd>(
        X.transpose() * w.asDiagonal() * X, w);
  };

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(cols);
  const double pooled = (y.sum() + 0.5) / (trials.sum() + 1.0);
  beta(0) = std::log(pooled / (1.0 - pooled));

  Eigen::VectorXd mu = mean_vec(beta);
  double dev = binom_deviance(y, trials, mu);
  fit.deviance_history.push_back(dev);

  constexpr int kMaxIter = 100;
  constexpr double kTol = 1e-8;
  for (int iter = 1; iter <= kMaxIter; ++iter) {
    const auto [info, w] = info_matrix(mu);
    Eigen::VectorXd z(rows);
    const Eigen::VectorXd eta = X * beta;
    for (Eigen::Index i = 0; i < rows; ++i) {
      z(i) = eta(i) + (y(i) - trials(i) * mu(i)) / w(i);
    }
    const Eigen::VectorXd rhs = X.transpose() * (w.asDiagonal() * z);
    Eigen::VectorXd proposal = info.ldlt().solve(rhs);

    // Halve toward the current point until the deviance stops rising.
    Eigen::VectorXd candidate = proposal;
    Eigen::VectorXd mu_cand = mean_vec(candidate);
    double dev_cand = binom_deviance(y, trials, mu_cand);
    int halvings = 0;
    while (dev_cand > dev + 1e-10 && halvings < 40) {
      candidate = 0.5 * (candidate + beta);
      mu_cand = mean_vec(candidate);
      dev_cand = binom_deviance(y, trials, mu_cand);
      ++halvings;
    }

    const double step = (candidate - beta).cwiseAbs().maxCoeff();
    beta = candidate;
    mu = mu_cand;
    dev = dev_cand;
    fit.deviance_history.push_back(dev);
    fit.iterations = iter;
    if (step < kTol) {
      fit.converged = true;
      break;
    }
  }

  fit.separated = beta.cwiseAbs().maxCoeff() > 30.0;
  if (fit.separated) fit.converged = false;

  fit.beta = beta;
  fit.deviance = dev;
  const auto [info, w] = info_matrix(mu);
  Eigen::MatrixXd cov =
      info.ldlt().solve(Eigen::MatrixXd::Identity(cols, cols));
  fit.covariance = 0.5 * (cov + cov.transpose());
  if (fit.names.empty()) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      fit.names.push_back("b" + std::to_string(c));
    }
  }
  return fit;
}

std::vector<WaldRow> wald_report(const GlmFit& fit) {
  if (!fit.converged) {
    throw std::runtime_error(
        fit.separated
            ? "fit shows quasi-complete separation; report refused"
            : "fit did not converge; report refused");
  }
  std::vector<WaldRow> rows;
  rows.reserve(fit.beta.size());
  for (Eigen::Index i = 0; i < fit.beta.size(); ++i) {
    WaldRow row;
    row.term = fit.names[i];
    row.estimate = fit.beta(i);
    row.std_err = std::sqrt(std::max(fit.covariance(i, i), 0.0));
    row.odds_ratio = std::exp(row.estimate);
    row.ci_low = std::exp(row.estimate - 1.96 * row.std_err);
    row.ci_high = std::exp(row.estimate + 1.96 * row.std_err);
    const double z = row.std_err > 0.0
                         ? std::abs(row.estimate) / row.std_err
                         : std::numeric_limits<double>::infinity();
    row.p_value = std::erfc(z / std::numbers::sqrt2);
    rows.push_back(row);
  }
  return rows;
}

Eigen::VectorXd default_synth_coefficients() {
  Eigen::VectorXd beta(20);
  beta << -0.85,                  // intercept
      0.215, -0.45,               // Monday, weekend
      -0.20, 0.05, -0.10, 0.00,   // Jan..Apr
      0.08, -0.30, 0.10, -0.05,   // May..Aug
      0.02, -0.25, -0.40,         // Sep, Nov, Dec
      0.25,                       // lagged TH share
      -0.20,                      // holiday
      -0.004, 0.006, 0.025, -0.05;  // assignments and exits, 7-day windows
  return beta;
}

SynthResult synth_generate(const Eigen::VectorXd& true_coeffs,
                           const SynthConfig& cfg) {
  const auto names = design_column_names(DaySpec::ThreeLevel,
                                         StateFeatures::Rolling);
  if (true_coeffs.size() != static_cast<Eigen::Index>(names.size())) {
    throw std::invalid_argument(
        "coefficient vector must match the design column order (" +
        std::to_string(names.size()) + " terms)");
  }
  if (cfg.n_days < 1) throw std::invalid_argument("need at least one day");

  SynthResult out;
  const Date start = cfg.start != 0 ? cfg.start : make_date(2010, 1, 1);
  if (cfg.holidays.empty()) {
    // synthetic fixed-date holidays spanning the generated range
    using namespace std::chrono;
    const int y0 = static_cast<int>(
        year_month_day{sys_days{days{start}}}.year());
    const int y1 = static_cast<int>(
        year_month_day{sys_days{days{start + cfg.n_days}}}.year());
    for (int y = y0; y <= y1 + 1; ++y) {
      out.holidays.insert(make_date(y, 1, 1));
      out.holidays.insert(make_date(y, 7, 4));
      out.holidays.insert(make_date(y, 11, 11));
      out.holidays.insert(make_date(y, 12, 25));
    }
  } else {
    out.holidays = cfg.holidays;
  }

  RngStream rng(cfg.seed ^ 0xA0B1C2D3E4F50617ull);

  std::vector<int> actual_es(cfg.n_days, 0), actual_th(cfg.n_days, 0);
  std::vector<int> totals(cfg.n_days, 0);
  std::vector<double> exit_es(cfg.n_days, 0.0), exit_th(cfg.n_days, 0.0);
  double mean_exit_es = 4.0, mean_exit_th = 2.0;

  const auto window = [&](const auto& series, int idx) {
    double acc = 0.0;
    for (int j = std::max(0, idx - 7); j < idx; ++j) acc += series[j];
    return acc;
  };

  for (int idx = 0; idx < cfg.n_days; ++idx) {
    const Date date = start + idx;
    const DayType day_type = day_type_of(date);
    const double mult = day_type == DayType::Monday
                            ? 1.25
                            : (day_type == DayType::Weekend ? 0.45 : 1.0);
    const int n = 1 + poisson_draw(cfg.base_volume * mult, rng);
    const int n_th = binomial_draw(n, cfg.th_predicted_share, rng);
    const int n_es = n - n_th;

    mean_exit_es = std::max(
        0.2, 0.88 * mean_exit_es + 0.12 * 4.0 + 0.3 * rng.normal());
    mean_exit_th = std::max(
        0.2, 0.88 * mean_exit_th + 0.12 * 2.0 + 0.3 * rng.normal());
    exit_es[idx] = poisson_draw(mean_exit_es, rng);
    exit_th[idx] = poisson_draw(mean_exit_th, rng);

    DayRow row;
    row.date = date;
    row.n = n;
    row.n_es = n_es;
    row.n_th = n_th;
    row.holiday = out.holidays.count(date) > 0;
    row.day_type = day_type;
    row.month = month_of(date);
    row.th_share_lag1 =
        idx >= 1 && totals[idx - 1] > 0
            ? static_cast<double>(actual_th[idx - 1]) / totals[idx - 1]
            : 0.0;
    row.es_assign_7d = window(actual_es, idx);
    row.th_assign_7d = window(actual_th, idx);
    row.es_exit_7d = window(exit_es, idx);
    row.th_exit_7d = window(exit_th, idx);
    {
      const Date week_start = monday_of_week(date) - 7;
      std::array<double, 4> block{0.0, 0.0, 0.0, 0.0};
      for (Date wd = week_start; wd < week_start + 7; ++wd) {
        const int j = static_cast<int>(wd - start);
        if (j < 0 || j >= cfg.n_days) continue;
        block[0] += actual_es[j];
        block[1] += actual_th[j];
        block[2] += exit_es[j];
        block[3] += exit_th[j];
      }
      row.block = block;
    }

    // linear predictor in design column order
    Eigen::VectorXd x = Eigen::VectorXd::Zero(true_coeffs.size());
    int c = 0;
    x(c++) = 1.0;
    x(c++) = day_type == DayType::Monday ? 1.0 : 0.0;
    x(c++) = day_type == DayType::Weekend ? 1.0 : 0.0;
    for (int m : {1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12}) {
      x(c++) = row.month == m ? 1.0 : 0.0;
    }
    x(c++) = row.th_share_lag1;
    x(c++) = row.holiday ? 1.0 : 0.0;
    x(c++) = row.es_assign_7d;
    x(c++) = row.th_assign_7d;
    x(c++) = row.es_exit_7d;
    x(c++) = row.th_exit_7d;
    const double prob = sigmoid(true_coeffs.dot(x));

    row.y_up = binomial_draw(n_es, prob, rng);
    row.y_down = binomial_draw(n_th, prob, rng);
    row.y_all = row.y_up + row.y_down;

    actual_th[idx] = n_th - row.y_down + row.y_up;
    actual_es[idx] = n - actual_th[idx];
    totals[idx] = n;

    for (int i = 0; i < row.y_up; ++i) {
      out.records.push_back({date, Placement::ES, Placement::TH});
    }
    for (int i = 0; i < n_es - row.y_up; ++i) {
      out.records.push_back({date, Placement::ES, Placement::ES});
    }
    for (int i = 0; i < row.y_down; ++i) {
      out.records.push_back({date, Placement::TH, Placement::ES});
    }
    for (int i = 0; i < n_th - row.y_down; ++i) {
      out.records.push_back({date, Placement::TH, Placement::TH});
    }
    out.exits[date] = ExitCounts{exit_es[idx], exit_th[idx]};
    out.panel.rows.push_back(row);
  }
  return out;
}

std::string panel_to_csv(const DailyPanel& panel) {
  std::ostringstream outstream;
  outstream << kPanelHeader << "\n";
  for (const auto& row : panel.rows) {
    outstream << date_to_string(row.date) << "," << row.n << "," << row.n_es
              << "," << row.n_th << "," << row.y_all << "," << row.y_up << ","
              << row.y_down << "," << io::format_double(row.th_share_lag1)
              << "," << (row.holiday ? 1 : 0) << "," << to_string(row.day_type)
              << "," << row.month << ","
              << io::format_double(row.es_assign_7d) << ","
              << io::format_double(row.th_assign_7d) << ","
              << io::format_double(row.es_exit_7d) << ","
              << io::format_double(row.th_exit_7d) << "\n";
  }
  return outstream.str();
}

DailyPanel panel_from_csv(const std::string& text) {
  DailyPanel panel;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto f = io::split_csv_line(line);
    if (f.size() != 15) {
      throw std::invalid_argument("panel row needs 15 fields: " + line);
    }
    DayRow row;
    row.date = parse_date(f[0]);
    row.n = std::stoi(f[1]);
    row.n_es = std::stoi(f[2]);
    row.n_th = std::stoi(f[3]);
    row.y_all = std::stoi(f[4]);
    row.y_up = std::stoi(f[5]);
    row.y_down = std::stoi(f[6]);
    row.th_share_lag1 = std::stod(f[7]);
    row.holiday = f[8] == "1";
    if (f[9] == "Mon") row.day_type = DayType::Monday;
    else if (f[9] == "Weekend") row.day_type = DayType::Weekend;
    else row.day_type = DayType::Midweek;
    row.month = std::stoi(f[10]);
    row.es_assign_7d = std::stod(f[11]);
    row.th_assign_7d = std::stod(f[12]);
    row.es_exit_7d = std::stod(f[13]);
    row.th_exit_7d = std::stod(f[14]);
    panel.rows.push_back(row);
  }
  return panel;
}

std::string records_to_csv(const std::vector<DecisionRecord>& records) {
  std::ostringstream out;
  out << "date,predicted,actual\n";
  for (const auto& rec : records) {
    out << date_to_string(rec.date) << "," << to_string(rec.predicted) << ","
        << to_string(rec.actual) << "\n";
  }
  return out.str();
}

std::vector<DecisionRecord> records_from_csv(const std::string& text) {
  std::vector<DecisionRecord> records;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto f = io::split_csv_line(line);
    if (f.size() != 3) {
      throw std::invalid_argument("record row needs 3 fields: " + line);
    }
    records.push_back({parse_date(f[0]), placement_from_string(f[1]),
                       placement_from_string(f[2])});
  }
  return records;
}

std::string exits_to_csv(const ExitSeries& exits) {
  std::ostringstream out;
  out << "date,es_exits,th_exits\n";
  for (const auto& [date, counts] : exits) {
    out << date_to_string(date) << "," << io::format_double(counts.es) << ","
        << io::format_double(counts.th) << "\n";
  }
  return out.str();
}

ExitSeries exits_from_csv(const std::string& text) {
  ExitSeries exits;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto f = io::split_csv_line(line);
    if (f.size() != 3) {
      throw std::invalid_argument("exit row needs 3 fields: " + line);
    }
    exits[parse_date(f[0])] = ExitCounts{std::stod(f[1]), std::stod(f[2])};
  }
  return exits;
}

HolidaySet holidays_from_text(const std::string& text) {
  HolidaySet set;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    set.insert(parse_date(line));
  }
  return set;
}

}  // namespace discretion::audit
