// Copyright 2026 The randent authors.
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

#include "randent/coefficients.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "randent/errors.hpp"

namespace randent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite_nonzero(std::complex<double> z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag()) && z != std::complex<double>(0.0, 0.0);
}

// Neumaier-compensated accumulator. Terms of the sigma series span hundreds
// of orders of magnitude at large r, so plain summation loses the tail.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  void rescale(double f) {
    sum *= f;
    comp *= f;
  }
  double value() const { return sum + comp; }
};

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_real(z.real());
  std::string s = format_real(z.real());
  s += (z.imag() < 0 ? "-" : "+");
  double im = std::abs(z.imag());
  s += format_real(im);
  s += "i";
  return s;
}

}  // namespace

CoefficientSequence CoefficientSequence::exponential(std::complex<double> scale) {
  CoefficientSequence seq;
  seq.kind_ = SeqKind::kExponential;
  seq.scale_ = scale;
  if (!finite_nonzero(scale)) throw ConfigError("coefficient scale must be finite and nonzero");
  return seq;
}

CoefficientSequence CoefficientSequence::geometric_factorial(double c, double s,
                                                             std::complex<double> scale) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("geomfact: c must be positive");
  if (!(s > 0.0) || !std::isfinite(s)) throw ConfigError("geomfact: s must be positive");
  if (!finite_nonzero(scale)) throw ConfigError("coefficient scale must be finite and nonzero");
  CoefficientSequence seq;
  seq.kind_ = SeqKind::kGeometricFactorial;
  seq.c_ = c;
  seq.s_ = s;
  seq.scale_ = scale;
  return seq;
}

CoefficientSequence CoefficientSequence::mittag_leffler(double rho, std::complex<double> scale) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw ConfigError("mittag: rho must be positive");
  if (!finite_nonzero(scale)) throw ConfigError("coefficient scale must be finite and nonzero");
  CoefficientSequence seq;
  seq.kind_ = SeqKind::kMittagLeffler;
  seq.rho_ = rho;
  seq.scale_ = scale;
  return seq;
}

CoefficientSequence CoefficientSequence::explicit_list(std::vector<std::complex<double>> coeffs,
                                                       std::complex<double> scale) {
  if (!finite_nonzero(scale)) throw ConfigError("coefficient scale must be finite and nonzero");
  while (!coeffs.empty() && coeffs.back() == std::complex<double>(0.0, 0.0)) coeffs.pop_back();
  if (coeffs.empty()) throw ConfigError("explicit list needs at least one nonzero coefficient");
  for (auto z : coeffs) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ConfigError("explicit list coefficients must be finite");
    }
  }
  CoefficientSequence seq;
  seq.kind_ = SeqKind::kExplicitList;
  seq.list_ = std::move(coeffs);
  seq.scale_ = scale;
  return seq;
}

std::complex<double> CoefficientSequence::coefficient(int j) const {
  if (j < 0) throw ConfigError("coefficient index must be nonnegative");
  double star = 1.0;
  for (int k = 0; k < star_order_; ++k) star *= static_cast<double>(j);
  switch (kind_) {
    case SeqKind::kExponential:
      return scale_ * (star * std::exp(-std::lgamma(j + 1.0)));
    case SeqKind::kGeometricFactorial:
      return scale_ * (star * std::exp(j * std::log(c_) - s_ * std::lgamma(j + 1.0)));
    case SeqKind::kMittagLeffler:
      return scale_ * (star * std::exp(-std::lgamma(1.0 + j / rho_)));
    case SeqKind::kExplicitList: {
      if (j >= static_cast<int>(list_.size())) return {0.0, 0.0};
      return scale_ * list_[static_cast<size_t>(j)];
    }
  }
  return {0.0, 0.0};
}

double CoefficientSequence::log_abs_coefficient(int j) const {
  if (j < 0) throw ConfigError("coefficient index must be nonnegative");
  double star = 0.0;
  if (star_order_ > 0) {
    if (j == 0) return -kInf;
    star = star_order_ * std::log(static_cast<double>(j));
  }
  switch (kind_) {
    case SeqKind::kExponential:
      return std::log(std::abs(scale_)) + star - std::lgamma(j + 1.0);
    case SeqKind::kGeometricFactorial:
      return std::log(std::abs(scale_)) + star + j * std::log(c_) - s_ * std::lgamma(j + 1.0);
    case SeqKind::kMittagLeffler:
      return std::log(std::abs(scale_)) + star - std::lgamma(1.0 + j / rho_);
    case SeqKind::kExplicitList: {
      if (j >= static_cast<int>(list_.size())) return -kInf;
      const double m = std::abs(list_[static_cast<size_t>(j)]);
      if (m == 0.0) return -kInf;
      return std::log(std::abs(scale_)) + star + std::log(m);
    }
  }
  return -kInf;
}

double CoefficientSequence::term_ratio(int j, double r) const {
  if (kind_ == SeqKind::kExplicitList) {
    throw std::logic_error("term_ratio is defined for generator kinds only");
  }
  if (j < 1) throw std::logic_error("term_ratio needs j >= 1");
  double base;
  switch (kind_) {
    case SeqKind::kExponential:
      base = (r * r) / ((j + 1.0) * (j + 1.0));
      break;
    case SeqKind::kGeometricFactorial:
      base = c_ * c_ * r * r * std::exp(-2.0 * s_ * std::log(j + 1.0));
      break;
    case SeqKind::kMittagLeffler:
      base = r * r *
             std::exp(2.0 * (std::lgamma(1.0 + j / rho_) - std::lgamma(1.0 + (j + 1.0) / rho_)));
      break;
    default:
      return 0.0;
  }
  if (star_order_ > 0) {
    base *= std::exp(2.0 * star_order_ * (std::log(j + 1.0) - std::log(static_cast<double>(j))));
  }
  return base;
}

int CoefficientSequence::list_degree() const {
  if (kind_ != SeqKind::kExplicitList) return -1;
  return static_cast<int>(list_.size()) - 1;
}

bool CoefficientSequence::has_two_nonzero_terms() const {
  if (kind_ != SeqKind::kExplicitList) return true;  // generators have infinitely many
  int count = 0;
  for (size_t j = 0; j < list_.size(); ++j) {
    const bool zero_by_star = star_order_ > 0 && j == 0;
    if (!zero_by_star && list_[j] != std::complex<double>(0.0, 0.0)) ++count;
  }
  return count >= 2;
}

std::string CoefficientSequence::id() const {
  std::string core;
  const bool scaled = scale_ != std::complex<double>(1.0, 0.0);
  switch (kind_) {
    case SeqKind::kExponential:
      core = scaled ? "exponential(scale=" + format_complex(scale_) + ")" : "exponential";
      break;
    case SeqKind::kGeometricFactorial:
      core = "geomfact(c=" + format_real(c_) + ",s=" + format_real(s_) +
             (scaled ? ",scale=" + format_complex(scale_) : "") + ")";
      break;
    case SeqKind::kMittagLeffler:
      core = "mittag(rho=" + format_real(rho_) +
             (scaled ? ",scale=" + format_complex(scale_) : "") + ")";
      break;
    case SeqKind::kExplicitList: {
      core = "explicit(";
      for (size_t j = 0; j < list_.size(); ++j) {
        if (j) core += ",";
        core += format_complex(list_[j]);
      }
      if (scaled) core += ";scale=" + format_complex(scale_);
      core += ")";
      break;
    }
  }
  for (int k = 0; k < star_order_; ++k) core = "star(" + core + ")";
  return core;
}

namespace {

std::complex<double> parse_complex_token(const std::string& tok) {
  // Accepts "a", "a+bi", "a-bi", "bi".
  if (tok.empty()) throw ConfigError("empty complex literal");
  std::string t = tok;
  double re = 0.0, im = 0.0;
  if (t.back() == 'i') {
    t.pop_back();
    // Find the split between real and imaginary parts: last '+'/'-' not in
    // an exponent and not leading.
    size_t split = std::string::npos;
    for (size_t k = t.size(); k-- > 1;) {
      if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    std::string im_str = (split == std::string::npos) ? t : t.substr(split);
    std::string re_str = (split == std::string::npos) ? "" : t.substr(0, split);
    if (im_str.empty() || im_str == "+") im_str = "1";
    if (im_str == "-") im_str = "-1";
    try {
      im = std::stod(im_str);
      re = re_str.empty() ? 0.0 : std::stod(re_str);
    } catch (const std::exception&) {
      throw ConfigError("bad complex literal: " + tok);
    }
  } else {
    try {
      re = std::stod(t);
    } catch (const std::exception&) {
      throw ConfigError("bad real literal: " + tok);
    }
  }
  return {re, im};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

CoefficientSequence CoefficientSequence::parse(const std::string& id_in) {
  std::string id;
  for (char ch : id_in) {
    if (!std::isspace(static_cast<unsigned char>(ch))) id += ch;
  }
  if (id.rfind("star(", 0) == 0 && id.back() == ')') {
    return star_transform(parse(id.substr(5, id.size() - 6)));
  }
  auto get_kv = [](const std::string& body, const char* key) -> std::string {
    for (const auto& part : split(body, ',')) {
      auto kv = split(part, '=');
      if (kv.size() == 2 && kv[0] == key) return kv[1];
    }
    throw ConfigError(std::string("missing parameter '") + key + "'");
  };
  auto get_scale = [](const std::string& body) -> std::complex<double> {
    for (const auto& part : split(body, ',')) {
      auto kv = split(part, '=');
      if (kv.size() == 2 && kv[0] == "scale") return parse_complex_token(kv[1]);
    }
    return {1.0, 0.0};
  };
  if (id == "exponential") return exponential();
  if (id.rfind("exponential(", 0) == 0 && id.back() == ')') {
    return exponential(get_scale(id.substr(12, id.size() - 13)));
  }
  if (id.rfind("geomfact(", 0) == 0 && id.back() == ')') {
    const std::string body = id.substr(9, id.size() - 10);
    return geometric_factorial(std::stod(get_kv(body, "c")), std::stod(get_kv(body, "s")),
                               get_scale(body));
  }
  if (id.rfind("mittag(", 0) == 0 && id.back() == ')') {
    const std::string body = id.substr(7, id.size() - 8);
    return mittag_leffler(std::stod(get_kv(body, "rho")), get_scale(body));
  }
  if (id.rfind("explicit(", 0) == 0 && id.back() == ')') {
    std::string body = id.substr(9, id.size() - 10);
    std::complex<double> scale{1.0, 0.0};
    auto semi = body.find(';');
    if (semi != std::string::npos) {
      auto kv = split(body.substr(semi + 1), '=');
      if (kv.size() != 2 || kv[0] != "scale") throw ConfigError("bad explicit(...) suffix");
      scale = parse_complex_token(kv[1]);
      body = body.substr(0, semi);
    }
    std::vector<std::complex<double>> coeffs;
    for (const auto& tok : split(body, ',')) coeffs.push_back(parse_complex_token(tok));
    return explicit_list(std::move(coeffs), scale);
  }
  throw ConfigError("unrecognized base id: " + id_in);
}

void TruncationPolicy::validate() const {
  if (!(tail_tolerance > 0.0) || !(tail_tolerance < 1.0)) {
    throw ConfigError("tail_tolerance must lie in (0, 1)");
  }
  if (max_degree < 1) throw ConfigError("max_degree must be >= 1");
}

namespace {

struct SeriesSums {
  double log_scale;       // running max of log t_j
  double scaled_sum;      // sum t_j / exp(log_scale)
  double scaled_jsum;     // sum j t_j / exp(log_scale)
  int degree;
};

// Shared certified-tail loop behind sigma / truncation_degree /
// log_sigma_derivative. The tail past the cut is bounded by the geometric
// series with ratio term_ratio(N, r) <= 1/2, valid because the ratio is
// nonincreasing in j for every generator family.
SeriesSums certified_series_sums(const CoefficientSequence& seq, double r,
                                 const TruncationPolicy& policy, bool need_jsum) {
  if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("radius must be positive and finite");
  policy.validate();
  const double log_r = std::log(r);
  const double eps2 = policy.tail_tolerance * policy.tail_tolerance;

  CompensatedSum s_sum, j_sum;
  double log_scale = -kInf;

  if (seq.is_finite()) {
    const int deg = seq.list_degree();
    for (int j = 0; j <= deg; ++j) {
      const double lt = 2.0 * (seq.log_abs_coefficient(j) + j * log_r);
      if (lt == -kInf) continue;
      if (lt > log_scale) {
        const double f = std::exp(log_scale - lt);
        s_sum.rescale(f);
        j_sum.rescale(f);
        log_scale = lt;
      }
      const double w = std::exp(lt - log_scale);
      s_sum.add(w);
      if (need_jsum) j_sum.add(j * w);
    }
    return {log_scale, s_sum.value(), j_sum.value(), deg};
  }

  for (int j = 0; j <= policy.max_degree; ++j) {
    const double lt = 2.0 * (seq.log_abs_coefficient(j) + j * log_r);
    const bool term_finite = std::isfinite(lt);
    if (term_finite) {
      if (lt > log_scale) {
        const double f = (log_scale == -kInf) ? 0.0 : std::exp(log_scale - lt);
        s_sum.rescale(f);
        j_sum.rescale(f);
        log_scale = lt;
      }
      const double w = std::exp(lt - log_scale);
      s_sum.add(w);
      if (need_jsum) j_sum.add(j * w);
    }
    if (j >= 1 && term_finite) {
      const double q = seq.term_ratio(j, r);
      const double q_j = q * (j + 1.0) / j;  // ratio bound for the j t_j series
      const double q_max = need_jsum ? std::max(q, q_j) : q;
      if (q_max <= 0.5) {
        const double w = std::exp(lt - log_scale);
        bool ok = w * q / (1.0 - q) <= eps2 * s_sum.value();
        if (need_jsum) {
          ok = ok && (j * w * q_j / (1.0 - q_j) <= eps2 * j_sum.value());
        }
        if (ok) return {log_scale, s_sum.value(), j_sum.value(), j};
      }
    }
  }
  throw TruncationFailure("certified tail bound not reached by degree " +
                          std::to_string(policy.max_degree) + " for base " + seq.id() +
                          " at r=" + format_real(r));
}

}  // namespace

double sigma(const CoefficientSequence& seq, double r, const TruncationPolicy& policy) {
  return std::exp(log_sigma(seq, r, policy));
}

double log_sigma(const CoefficientSequence& seq, double r, const TruncationPolicy& policy) {
  const SeriesSums sums = certified_series_sums(seq, r, policy, false);
  return 0.5 * (sums.log_scale + std::log(sums.scaled_sum));
}

int truncation_degree(const CoefficientSequence& seq, double r, const TruncationPolicy& policy) {
  return certified_series_sums(seq, r, policy, false).degree;
}

double log_sigma_derivative(const CoefficientSequence& seq, double r,
                            const TruncationPolicy& policy) {
  const SeriesSums sums = certified_series_sums(seq, r, policy, true);
  return sums.scaled_jsum / sums.scaled_sum;
}

CoefficientSequence star_transform(const CoefficientSequence& seq) {
  CoefficientSequence out = seq;
  if (seq.kind_ == SeqKind::kExplicitList) {
    for (size_t j = 0; j < out.list_.size(); ++j) {
      out.list_[j] *= static_cast<double>(j);
    }
    while (!out.list_.empty() && out.list_.back() == std::complex<double>(0.0, 0.0)) {
      out.list_.pop_back();
    }
    if (out.list_.empty()) {
      throw ConfigError("star transform of a constant list has no nonzero coefficients");
    }
    return out;
  }
  out.star_order_ += 1;
  return out;
}

std::vector<std::complex<double>> truncate_base(const CoefficientSequence& seq, int degree_n) {
  if (degree_n < 0) throw ConfigError("truncation degree must be nonnegative");
  std::vector<std::complex<double>> coeffs(static_cast<size_t>(degree_n) + 1);
  for (int j = 0; j <= degree_n; ++j) coeffs[static_cast<size_t>(j)] = seq.coefficient(j);
  return coeffs;
}

}  // namespace randent
