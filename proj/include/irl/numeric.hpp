// Copyright 2026 The IRL Toolkit Authors.
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

#ifndef IRL_NUMERIC_HPP_
#define IRL_NUMERIC_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace irl {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(sum_i exp(args[i])), shifted by the max so no exp overflows.
inline double log_sum_exp(std::span<const double> args) {
    if (args.empty()) throw std::invalid_argument("log_sum_exp: no arguments");
    const double max_arg = *std::max_element(args.begin(), args.end());
    if (!std::isfinite(max_arg)) return max_arg;  // all -inf (or a stray inf/nan)
    double sum = 0.0;
    for (double a : args) sum += std::exp(a - max_arg);
    return max_arg + std::log(sum);
}

// log(sum_i w[i] * exp(args[i])) for non-negative weights.
inline double log_sum_exp_weighted(std::span<const double> args, std::span<const double> weights) {
    if (args.size() != weights.size() || args.empty())
        throw std::invalid_argument("log_sum_exp_weighted: bad arguments");
    double max_arg = kNegInf;
    for (std::size_t i = 0; i < args.size(); ++i)
        if (weights[i] > 0.0) max_arg = std::max(max_arg, args[i]);
    if (max_arg == kNegInf) return kNegInf;
    double sum = 0.0;
    for (std::size_t i = 0; i < args.size(); ++i)
        if (weights[i] > 0.0) sum += weights[i] * std::exp(args[i] - max_arg);
    return max_arg + std::log(sum);
}

inline double inf_norm(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double l2_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::vector<double> subtract(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("subtract: dimension mismatch");
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

}  // namespace irl

#endif  // IRL_NUMERIC_HPP_
