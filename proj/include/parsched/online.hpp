#ifndef PARSCHED_ONLINE_HPP
#define PARSCHED_ONLINE_HPP

#include <memory>

#include "parsched/job.hpp"
#include "parsched/solution_set.hpp"

namespace parsched {

// An online algorithm assigns one job at a time without knowledge of future
// jobs and maintains parallel solutions. A snapshot after k steps contains
// exactly jobs 1..k, completely assigned. Deterministic implementations are
// copyable so adversaries can fork continuations.
class OnlineAlgorithm {
public:
    virtual ~OnlineAlgorithm() = default;
    virtual void step(const Job& job) = 0;
    virtual SolutionSet snapshot() const = 0;
    virtual std::unique_ptr<OnlineAlgorithm> clone() const = 0;

    // min over solutions of max machine completion time; implementations
    // override this to avoid materializing a snapshot per step
    virtual double current_makespan() const { return makespan(snapshot()); }
};

// Exposes the inner algorithm's solutions repeated cyclically until `count`
// entries are visible.
class ReplicatedAlgorithm : public OnlineAlgorithm {
public:
    ReplicatedAlgorithm(std::unique_ptr<OnlineAlgorithm> inner, int count)
        : inner_(std::move(inner)), count_(count) {}
    void step(const Job& job) override { inner_->step(job); }
    SolutionSet snapshot() const override;
    double current_makespan() const override { return inner_->current_makespan(); }
    std::unique_ptr<OnlineAlgorithm> clone() const override {
        return std::make_unique<ReplicatedAlgorithm>(inner_->clone(), count_);
    }

private:
    std::unique_ptr<OnlineAlgorithm> inner_;
    int count_;
};

// Exposes only the first `count` solutions of the inner algorithm.
class TruncatedAlgorithm : public OnlineAlgorithm {
public:
    TruncatedAlgorithm(std::unique_ptr<OnlineAlgorithm> inner, int count)
        : inner_(std::move(inner)), count_(count) {}
    void step(const Job& job) override { inner_->step(job); }
    SolutionSet snapshot() const override;
    std::unique_ptr<OnlineAlgorithm> clone() const override {
        return std::make_unique<TruncatedAlgorithm>(inner_->clone(), count_);
    }

private:
    std::unique_ptr<OnlineAlgorithm> inner_;
    int count_;
};

// Baseline: non-preemptive greedy on the less loaded machine, duplicated
// into two identical solutions. Deliberately ignores the benefit of keeping
// the two solutions different; lower-bound tests run against it.
class NaiveClonePair : public OnlineAlgorithm {
public:
    void step(const Job& job) override;
    SolutionSet snapshot() const override;
    double current_makespan() const override { return schedule_.max_load(); }
    std::unique_ptr<OnlineAlgorithm> clone() const override {
        return std::make_unique<NaiveClonePair>(*this);
    }

private:
    Schedule schedule_;
    double total_ = 0.0;
};

} // namespace parsched

#endif
