#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pmseq/density.hpp"
#include "pmseq/pmspace.hpp"

namespace pmseq {

/// Eventually-periodic label pattern: position k maps to labels[(k-1) mod p].
class Pattern {
public:
    static Pattern constant(std::string label) { return Pattern({std::move(label)}); }
    static Pattern periodic(std::vector<std::string> labels) { return Pattern(std::move(labels)); }

    const std::string& at(Index k) const { return labels_[(k - 1) % labels_.size()]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t period() const { return labels_.size(); }
    bool is_constant() const;

private:
    explicit Pattern(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty()) throw std::invalid_argument("Pattern: needs at least one label");
    }
    std::vector<std::string> labels_;
};

/// A sequence in a finite PM space given as a base pattern with overrides on
/// a symbolic exception index set. Every term is defined for every k >= 1.
class SymbolicSequence {
public:
    SymbolicSequence(std::shared_ptr<const PMSpace> space, Pattern base,
                     SetDescription exceptions, Pattern exception_values);

    const PMSpace& space() const { return *space_; }
    std::shared_ptr<const PMSpace> space_ptr() const { return space_; }
    const Pattern& base() const { return base_; }
    const SetDescription& exceptions() const { return exceptions_; }
    const Pattern& exception_values() const { return exc_values_; }

    /// Label of the k-th term (exception pattern on exception indices).
    const std::string& term(Index k) const {
        return exceptions_.contains(k) ? exc_values_.at(k) : base_.at(k);
    }
    int term_index(Index k) const {
        return exceptions_.contains(k) ? exc_idx_[(k - 1) % exc_idx_.size()]
                                       : base_idx_[(k - 1) % base_idx_.size()];
    }

    /// Symbolic index set {k : pred[term_index(k)]} for a predicate over the
    /// space's points. Collapses to the core shape when a pattern is
    /// uniformly in or out of the predicate.
    SetDescription index_set_where(const std::vector<bool>& pred) const;

    /// {k : term(k) == label}.
    SetDescription fiber(const std::string& label) const;

private:
    std::shared_ptr<const PMSpace> space_;
    Pattern base_;
    SetDescription exceptions_;
    Pattern exc_values_;
    std::vector<int> base_idx_, exc_idx_;  // pattern labels resolved to point indices
};

}  // namespace pmseq
