#pragma once

// Irreducible systems of poles: construction from generator words, counting,
// enumeration and Hecke-symmetry.

#include <map>
#include <vector>

#include "hecke/cf.hpp"
#include "hecke/group.hpp"

namespace hecke {

struct ISP {
    GenWord word;
    RingElem D;
    Surd beta1;
    /// Simple numbers S^{−i}β_t, block t ascending, then i ascending.
    std::vector<Surd> positives;
    /// Block sizes m_t + 1, in block order.
    std::vector<int> block_sizes;
    bool symmetric = false;
    GenWord conjugate_word;

    int p() const { return word.p; }
};

struct CountTable {
    int p = 0;
    std::map<int, mpz_class> rows;
};

/// Builds the reduced points β_t from the block rotation of w and the simple
/// numbers S^{−i}β_t, 1 ≤ i ≤ m_t + 1. Throws ParabolicError or NonPrimitive.
ISP isp_of_word(const GenWord& w);

/// Number of aperiodic necklaces of length n over q letters.
mpz_class necklace_count(int q, int n);
/// p − 3 for n = 1, otherwise the necklace count over p − 1 letters.
mpz_class count_isps(int p, int n);
CountTable count_table(int p, int max_n);

std::vector<ISP> enumerate_isps(int p, int n);

bool is_hecke_symmetric(const GenWord& w);
GenWord conjugate_isp(const GenWord& w);

/// Every positive pole has the same period as its Hecke-conjugate.
bool symmetry_via_numbers(const ISP& isp);

}  // namespace hecke
