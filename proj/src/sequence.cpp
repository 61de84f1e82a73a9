#include "pmseq/sequence.hpp"

namespace pmseq {

bool Pattern::is_constant() const {
    for (const auto& l : labels_) {
        if (l != labels_.front()) return false;
    }
    return true;
}

SymbolicSequence::SymbolicSequence(std::shared_ptr<const PMSpace> space, Pattern base,
                                   SetDescription exceptions, Pattern exception_values)
    : space_(std::move(space)),
      base_(std::move(base)),
      exceptions_(std::move(exceptions)),
      exc_values_(std::move(exception_values)) {
    if (!space_) throw std::invalid_argument("SymbolicSequence: null space");
    for (const auto& l : base_.labels()) base_idx_.push_back(space_->index_of(l));
    for (const auto& l : exc_values_.labels()) exc_idx_.push_back(space_->index_of(l));
}

namespace {

/// {k : pred holds for pattern.at(k)} as a union of residue-class
/// progressions; the empty or full set when the pattern is uniform.
SetDescription pattern_index_set(const Pattern& pat, const std::vector<int>& idx,
                                 const std::vector<bool>& pred) {
    const Index p = pat.period();
    SetDescription out = SetDescription::empty_set();
    int hits = 0;
    for (Index r = 0; r < p; ++r) {
        if (pred[idx[r]]) {
            ++hits;
            out = SetDescription::union_of(out, SetDescription::ap(r + 1, p));
        }
    }
    if (hits == 0) return SetDescription::empty_set();
    if (static_cast<Index>(hits) == p) return SetDescription::all();
    return out;
}

}  // namespace

SetDescription SymbolicSequence::index_set_where(const std::vector<bool>& pred) const {
    SetDescription on_base = pattern_index_set(base_, base_idx_, pred);
    SetDescription on_exc = pattern_index_set(exc_values_, exc_idx_, pred);
    return SetDescription::union_of(
        SetDescription::inter_of(SetDescription::compl_of(exceptions_), on_base),
        SetDescription::inter_of(exceptions_, on_exc));
}

SetDescription SymbolicSequence::fiber(const std::string& label) const {
    std::vector<bool> pred(space_->size(), false);
    pred[space_->index_of(label)] = true;
    return index_set_where(pred);
}

}  // namespace pmseq
