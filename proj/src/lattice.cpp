#include "lattice.hpp"

#include "error.hpp"

#include <algorithm>
#include <string>

namespace wisealice::lattice {

Element atom(int k)
{
    if (k < 1 || k > 4)
        throw InputError("atom index must be in 1..4, got " + std::to_string(k));
    return static_cast<Element>(k);
}

bool is_atom(Element x) { return x != Element::Bottom && x != Element::Top; }

int atom_index(Element x) { return is_atom(x) ? static_cast<int>(x) : 0; }

std::string_view name(Element x)
{
    switch (x) {
    case Element::Bottom: return "O";
    case Element::Atom1: return "1";
    case Element::Atom2: return "2";
    case Element::Atom3: return "3";
    case Element::Atom4: return "4";
    case Element::Top: return "I";
    }
    return "?";
}

bool leq(Element x, Element y)
{
    return x == y || x == Element::Bottom || y == Element::Top;
}

Element join(Element x, Element y)
{
    if (leq(x, y))
        return y;
    if (leq(y, x))
        return x;
    return Element::Top; // two distinct atoms
}

Element meet(Element x, Element y)
{
    if (leq(x, y))
        return x;
    if (leq(y, x))
        return y;
    return Element::Bottom;
}

Element ortho(Element x)
{
    switch (x) {
    case Element::Bottom: return Element::Top;
    case Element::Top: return Element::Bottom;
    default: return atom(opposite(atom_index(x)));
    }
}

int opposite(int vertex)
{
    if (vertex < 1 || vertex > 4)
        throw InputError("vertex must be in 1..4, got " + std::to_string(vertex));
    return (vertex + 1) % 4 + 1;
}

int valuate(int question, int vertex)
{
    if (question < 1 || question > 4 || vertex < 1 || vertex > 4)
        throw InputError("question and vertex must be in 1..4");
    return vertex == opposite(question) ? 0 : 1;
}

LawReport audit_laws()
{
    LawReport r;
    r.join_commutative = r.meet_commutative = true;
    r.join_associative = r.meet_associative = true;
    r.join_idempotent = r.meet_idempotent = true;
    r.absorption = r.de_morgan = r.double_negation = true;
    r.excluded_middle = r.non_contradiction = r.ortho_order_reversing = true;

    for (Element x : kAllElements) {
        r.join_idempotent &= join(x, x) == x;
        r.meet_idempotent &= meet(x, x) == x;
        r.double_negation &= ortho(ortho(x)) == x;
        r.excluded_middle &= join(x, ortho(x)) == Element::Top;
        r.non_contradiction &= meet(x, ortho(x)) == Element::Bottom;

        for (Element y : kAllElements) {
            r.join_commutative &= join(x, y) == join(y, x);
            r.meet_commutative &= meet(x, y) == meet(y, x);
            r.absorption &= join(x, meet(x, y)) == x && meet(x, join(x, y)) == x;
            r.de_morgan &= ortho(join(x, y)) == meet(ortho(x), ortho(y)) &&
                           ortho(meet(x, y)) == join(ortho(x), ortho(y));
            if (leq(x, y))
                r.ortho_order_reversing &= leq(ortho(y), ortho(x));

            for (Element z : kAllElements) {
                r.join_associative &= join(join(x, y), z) == join(x, join(y, z));
                r.meet_associative &= meet(meet(x, y), z) == meet(x, meet(y, z));

                Element left = meet(join(x, y), z);
                Element right = join(meet(x, z), meet(y, z));
                if (left != right) {
                    r.distributive = false;
                    r.distributivity_counterexamples.push_back(
                        {atom_index(x), atom_index(y), atom_index(z), left, right});
                }
            }
        }
    }

    r.complement_sum_min = 2;
    r.complement_sum_max = 0;
    for (int v = 1; v <= 4; ++v) {
        int sum = 0;
        for (int k = 1; k <= 4; ++k) {
            sum += valuate(k, v);
            int pair = valuate(k, v) + valuate(opposite(k), v);
            r.complement_sum_min = std::min(r.complement_sum_min, pair);
            r.complement_sum_max = std::max(r.complement_sum_max, pair);
        }
        r.predicate_sums[static_cast<std::size_t>(v - 1)] = sum;
    }
    return r;
}

} // namespace wisealice::lattice
