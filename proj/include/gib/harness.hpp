#pragma once

#include "gib/gibdata.hpp"

namespace gib {

// Deduplicated word closure of a generating set inside GL(n, Z), including
// the identity and the generators' inverses.
struct GroupSample {
    std::vector<MatZ> generators;
    int max_word_length = 4;
    std::vector<MatZ> elements;
};

GroupSample word_closure(const std::vector<MatZ>& generators, int max_word_length);

struct CheckReport {
    std::string check;
    bool passed = false;
    size_t elements_checked = 0;
    size_t violations = 0;
    std::optional<MatZ> counterexample;
    std::string detail;
};

// Members whose characteristic polynomial is (x-1)^n must equal the
// identity; non-members in the sample are flagged before the check applies.
CheckReport unipotent_check(const GroupSample& sample, const GibData& data);

// Every diagonal block of every adapted decomposition has determinant +-1;
// equivalently each irreducible factor of the characteristic polynomial has
// unit constant term. Elements whose adapted basis exists only at finite
// index are still checked through their factor constant terms.
CheckReport block_det_check(const GroupSample& sample);

// The similarity-ratio map is multiplicative, and a strict generator has
// powers with pairwise distinct ratios up to the sample word length; samples
// without a strict element are flagged in the detail string.
CheckReport torus_part_check(const GroupSample& sample, const GibData& data);

bool lex_less(const MatZ& a, const MatZ& b);

}  // namespace gib
