// Copyright 2026 The Authors.
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

//
// Value oracle interface
//
// A ValueOracle is an immutable, normalized, monotone submodular set function
// over the dense ground set [0, ground_size()). It can be shared freely
// between threads. Per-run mutable state lives in a SetEvaluator, which keeps
// a current set S together with whatever accumulator makes marginal queries
// cheap for that objective.

#ifndef CONSUB_ORACLE_H_
#define CONSUB_ORACLE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>

#include "consub/element_set.h"

namespace consub {

class ValueOracle;

// Incremental evaluator holding a current set S.
//
// Oracle-call accounting: Gain, Loss, Add and Remove each count as one call
// (each yields the value of one new set, f(S) being cached).
class SetEvaluator {
 public:
  virtual ~SetEvaluator() = default;
  SetEvaluator(const SetEvaluator&) = delete;
  SetEvaluator& operator=(const SetEvaluator&) = delete;

  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool Contains(ElementId e) const { return members_.Contains(e); }
  // Cached f(S).
  double value() const { return value_; }
  std::uint64_t oracle_calls() const { return calls_; }
  const ValueOracle& oracle() const { return oracle_; }

  // f(x | S). Exactly 0 when x is already in S.
  double Gain(ElementId x);
  // f(r | S - r). `r` must be a member.
  double Loss(ElementId r);
  // S <- S + x. Throws std::invalid_argument if x is a member.
  void Add(ElementId x);
  // S <- S - r. Throws std::invalid_argument if r is not a member.
  void Remove(ElementId r);
  // Replaces the current set.
  void Assign(const ElementSet& s);

 protected:
  explicit SetEvaluator(const ValueOracle& oracle) : oracle_(oracle) {}

  // Hooks. The base class has already validated ids and, for OnInsert and
  // OnErase, already updated members(). Both return the new f(S).
  virtual double ComputeGain(ElementId x) const = 0;
  virtual double ComputeLoss(ElementId r) const;
  virtual double OnInsert(ElementId x) = 0;
  virtual double OnErase(ElementId r);
  virtual void OnClear() = 0;

 private:
  void CheckId(ElementId e) const;

  const ValueOracle& oracle_;
  ElementSet members_;
  double value_ = 0.0;
  std::uint64_t calls_ = 0;
};

class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual std::string_view name() const = 0;
  virtual std::size_t ground_size() const = 0;

  // f(S) evaluated from scratch. Ids must be distinct and in range
  // (std::invalid_argument otherwise).
  double Eval(std::span<const ElementId> set) const;
  double Eval(const ElementSet& set) const { return Eval(set.ids()); }

  // Fresh evaluator positioned at S = {}. The default implementation answers
  // every query with from-scratch evaluations.
  virtual std::unique_ptr<SetEvaluator> NewEvaluator() const;

  void CheckId(ElementId e) const;

 protected:
  virtual double Evaluate(std::span<const ElementId> set) const = 0;

 private:
  [[noreturn]] void ThrowDuplicate(ElementId e) const;
};

// f(x | S) = f(S + x) - f(S) from two from-scratch evaluations; exactly 0 when
// x is in S (no oracle calls in that case). Adds the number of calls made to
// `*calls` when given.
double Marginal(const ValueOracle& oracle, ElementId x, const ElementSet& s,
                std::uint64_t* calls = nullptr);

// Evaluator that recomputes everything through ValueOracle::Eval.
class OracleEvaluator : public SetEvaluator {
 public:
  explicit OracleEvaluator(const ValueOracle& oracle) : SetEvaluator(oracle) {}

 protected:
  double ComputeGain(ElementId x) const override;
  double OnInsert(ElementId x) override;
  double OnErase(ElementId r) override;
  void OnClear() override {}
};

}  // namespace consub

#endif  // CONSUB_ORACLE_H_
