#pragma once

#include <span>

#include "foldse/dataset.hpp"
#include "foldse/learner.hpp"
#include "foldse/program.hpp"

namespace foldse {

// One rule per round: the most frequent remaining label is the target, all
// other remaining rows are negatives. Only the covered targets are removed.
// The fallback is the majority label of the whole training set.
MulticlassModel fit_multiclass(const Dataset& ds, const Hyperparams& hp, LearnStats* stats = nullptr);

// Class of the first rule that covers the row, else the fallback.
Symbol predict_multiclass(const MulticlassModel& m, std::span<const Value> row, std::size_t num_features);

}  // namespace foldse
