#pragma once

#include <string>
#include <vector>

namespace qhopf {

// All shapes are plain integer vectors. A Partition is weakly decreasing,
// a WeakComposition may contain zeros.
using Composition = std::vector<int>;
using Partition = std::vector<int>;
using WeakComposition = std::vector<int>;

int weight(const Composition& a);
int length(const Composition& a);

std::vector<int> descent_set(const Composition& a);
Composition composition_of_set(const std::vector<int>& s, int n);

// alpha ⪯ beta: alpha is coarser, i.e. des(alpha) ⊆ des(beta).
bool refines(const Composition& alpha, const Composition& beta);

Composition concat(const Composition& a, const Composition& b);
Composition near_concat(const Composition& a, const Composition& b);
Composition complement(const Composition& a);
Composition reverse(const Composition& a);
Partition to_partition(const Composition& a);
Composition collapse(const WeakComposition& a);

bool is_partition(const std::vector<int>& a);
Partition transpose(const Partition& la);

// Reverse lexicographic order: (3), (2,1), (1,2), (1,1,1).
std::vector<Composition> compositions_of(int n);
std::vector<Partition> partitions_of(int n);
std::vector<WeakComposition> weak_compositions_of(int n, int len);
// Coarsenings (resp. refinements) of a, in the order of compositions_of.
std::vector<Composition> coarsenings(const Composition& a);
std::vector<Composition> refinements(const Composition& a);

long long binom2(long long n);
long long binom2_sum(const std::vector<int>& a);  // Σ C(a_i, 2)
long long ne_count(const Partition& la);         // NE(λ)

std::string format_composition(const Composition& a);
Composition parse_composition(const std::string& s);

}  // namespace qhopf
