#include "parsched/online.hpp"

namespace parsched {

SolutionSet ReplicatedAlgorithm::snapshot() const {
    SolutionSet inner = inner_->snapshot();
    SolutionSet out;
    out.total_size = inner.total_size;
    out.solutions.reserve(static_cast<size_t>(count_));
    for (int k = 0; k < count_; ++k)
        out.solutions.push_back(inner.solutions[static_cast<size_t>(k) % inner.solutions.size()]);
    return out;
}

SolutionSet TruncatedAlgorithm::snapshot() const {
    SolutionSet inner = inner_->snapshot();
    if (static_cast<int>(inner.solutions.size()) > count_)
        inner.solutions.resize(static_cast<size_t>(count_));
    return inner;
}

void NaiveClonePair::step(const Job& job) {
    const int machine = schedule_.load(1) <= schedule_.load(2) ? 1 : 2;
    const double start = schedule_.load(machine);
    schedule_.add_piece(Piece{machine, job.index, start, start + job.size});
    total_ += job.size;
}

SolutionSet NaiveClonePair::snapshot() const {
    return SolutionSet{{schedule_, schedule_}, total_};
}

} // namespace parsched
