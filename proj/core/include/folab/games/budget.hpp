/*
 * Copyright 2026 The folab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FOLAB_GAMES_BUDGET_HPP_
#define FOLAB_GAMES_BUDGET_HPP_

#include <cstdint>
#include <limits>

#include "folab/errors.hpp"

namespace folab {

struct BudgetCeilings {
  std::uint64_t q_g = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t q_h = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t q_d = std::numeric_limits<std::uint64_t>::max();
};

/// Per-run query counters with enforced ceilings. The classical harness
/// issues queries sequentially, so query depth equals the total count and
/// query width is 1; both are carried only as bound-calculator inputs.
class QueryBudget {
 public:
  QueryBudget() = default;
  explicit QueryBudget(BudgetCeilings ceilings) : ceilings_(ceilings) {}

  void charge_g() { charge(used_g_, ceilings_.q_g, "q_G"); }
  void charge_h() { charge(used_h_, ceilings_.q_h, "q_H"); }
  void charge_d() { charge(used_d_, ceilings_.q_d, "q_D"); }

  std::uint64_t used_g() const { return used_g_; }
  std::uint64_t used_h() const { return used_h_; }
  std::uint64_t used_d() const { return used_d_; }
  std::uint64_t depth() const { return used_g_ + used_h_; }
  static constexpr std::uint64_t width() { return 1; }

  const BudgetCeilings& ceilings() const { return ceilings_; }

  bool operator==(const QueryBudget&) const = default;

 private:
  static void charge(std::uint64_t& used, std::uint64_t cap,
                     const char* which) {
    if (used >= cap) {
      throw BudgetError(std::string("query budget exceeded: ") + which);
    }
    ++used;
  }

  BudgetCeilings ceilings_{};
  std::uint64_t used_g_ = 0;
  std::uint64_t used_h_ = 0;
  std::uint64_t used_d_ = 0;
};

inline bool operator==(const BudgetCeilings& a, const BudgetCeilings& b) {
  return a.q_g == b.q_g && a.q_h == b.q_h && a.q_d == b.q_d;
}

}  // namespace folab

#endif  // FOLAB_GAMES_BUDGET_HPP_
