#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

// The six-element orthocomplemented lattice of the players' propositions:
// O < {1, 2, 3, 4} < I, with 1 and 3 (and 2 and 4) mutual complements.
// Non-distributive, so no Boolean algebra and no classical measure on it.
namespace wisealice::lattice {

enum class Element : std::uint8_t { Bottom, Atom1, Atom2, Atom3, Atom4, Top };

inline constexpr std::array<Element, 6> kAllElements{
    Element::Bottom, Element::Atom1, Element::Atom2,
    Element::Atom3,  Element::Atom4, Element::Top};

/// Atom k for k in 1..4. Throws InputError otherwise.
Element atom(int k);
bool is_atom(Element x);
/// Index 1..4 of an atom, 0 for Bottom/Top.
int atom_index(Element x);
std::string_view name(Element x);

bool leq(Element x, Element y);
Element join(Element x, Element y);
Element meet(Element x, Element y);
Element ortho(Element x);

/// Vertex opposite to v on the square (1<->3, 2<->4).
int opposite(int vertex);

/// Truth value of "the ball is at vertex `question`" as seen from Bob's
/// initial vertex: false only for the opposite vertex.
int valuate(int question, int vertex);

struct DistributivityCounterexample {
    int j = 0, k = 0, l = 0;
    Element left = Element::Bottom;   // (a_j v a_k) ^ a_l
    Element right = Element::Bottom;  // (a_j ^ a_l) v (a_k ^ a_l)
};

struct LawReport {
    bool join_commutative = false;
    bool join_associative = false;
    bool join_idempotent = false;
    bool meet_commutative = false;
    bool meet_associative = false;
    bool meet_idempotent = false;
    bool absorption = false;
    bool de_morgan = false;
    bool double_negation = false;
    bool excluded_middle = false;
    bool non_contradiction = false;
    bool ortho_order_reversing = false;
    bool distributive = true;
    std::vector<DistributivityCounterexample> distributivity_counterexamples;

    // Predicate side: sum over questions of valuate(k, v) per vertex, and the
    // pointwise range of valuate(j, .) + valuate(opposite(j), .).
    std::array<int, 4> predicate_sums{};
    int complement_sum_min = 0;
    int complement_sum_max = 0;
};

LawReport audit_laws();

} // namespace wisealice::lattice
