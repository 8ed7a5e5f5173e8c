#include "bsgs.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace grouplen::detail {

void BsgsLevel::recompute_orbit(std::size_t degree) {
    orbit.clear();
    orbit_pos.assign(degree, -1);
    transversal.clear();

    orbit.push_back(base_point);
    orbit_pos[base_point] = 0;
    transversal.push_back(Permutation(degree));

    for (std::size_t head = 0; head < orbit.size(); ++head) {
        point_t x = orbit[head];
        for (const Permutation& s : gens) {
            point_t y = s(x);
            if (orbit_pos[y] < 0) {
                orbit_pos[y] = static_cast<std::int64_t>(orbit.size());
                orbit.push_back(y);
                transversal.push_back(transversal[head] * s);
            }
        }
    }
}

std::pair<Permutation, std::size_t> Bsgs::sift(const Permutation& g) const {
    Permutation r = g;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const BsgsLevel& lvl = levels[i];
        point_t x = r(lvl.base_point);
        std::int64_t k = lvl.orbit_pos[x];
        if (k < 0) return {std::move(r), i};
        r = r * lvl.transversal[static_cast<std::size_t>(k)].inverse();
    }
    return {std::move(r), levels.size()};
}

bool Bsgs::contains(const Permutation& g) const {
    auto [residue, level] = sift(g);
    return level == levels.size() && residue.is_identity();
}

namespace {

// Appends a new deepest level whose base is the smallest point moved by h.
void append_level(Bsgs& chain, const Permutation& h) {
    BsgsLevel lvl;
    lvl.base_point = *h.smallest_moved_point();
    chain.levels.push_back(std::move(lvl));
}

}  // namespace

Bsgs build_bsgs(std::size_t degree, const std::vector<Permutation>& generators) {
    Bsgs chain;
    chain.degree = degree;

    // Seed the chain: level i holds the input generators fixing the first i
    // base points; new base points are the smallest moved points.
    for (const Permutation& g : generators) {
        if (g.is_identity()) continue;
        std::size_t i = 0;
        while (true) {
            if (i == chain.levels.size()) {
                append_level(chain, g);
                chain.levels[i].gens.push_back(g);
                break;
            }
            chain.levels[i].gens.push_back(g);
            if (g(chain.levels[i].base_point) != chain.levels[i].base_point) break;
            ++i;
        }
    }
    for (BsgsLevel& lvl : chain.levels) lvl.recompute_orbit(degree);

    // Verification loop: establish, from the deepest level up, that the
    // stabilizer of each level's base point inside that level's group is
    // exactly the next level's group, by sifting all Schreier generators.
    // A nontrivial residue surfacing at level j becomes a strong generator
    // of levels i+1..j and verification resumes at j.
    if (!chain.levels.empty()) {
        std::size_t i = chain.levels.size() - 1;
        while (true) {
            bool added = false;
            {
                const BsgsLevel& lvl = chain.levels[i];
                for (std::size_t k = 0; k < lvl.orbit.size() && !added; ++k) {
                    for (std::size_t si = 0; si < lvl.gens.size() && !added; ++si) {
                        const Permutation& s = lvl.gens[si];
                        point_t image = s(lvl.orbit[k]);
                        const Permutation& u_to =
                            lvl.transversal[static_cast<std::size_t>(lvl.orbit_pos[image])];
                        Permutation schreier = lvl.transversal[k] * s * u_to.inverse();
                        if (schreier.is_identity()) continue;

                        // Sift through the chain below level i.
                        Permutation r = schreier;
                        std::size_t j = i + 1;
                        for (; j < chain.levels.size(); ++j) {
                            const BsgsLevel& deeper = chain.levels[j];
                            point_t x = r(deeper.base_point);
                            std::int64_t pos = deeper.orbit_pos[x];
                            if (pos < 0) break;
                            r = r * deeper.transversal[static_cast<std::size_t>(pos)].inverse();
                        }
                        if (r.is_identity()) continue;

                        if (j == chain.levels.size()) append_level(chain, r);
                        for (std::size_t l = i + 1; l <= j; ++l) {
                            chain.levels[l].gens.push_back(r);
                            chain.levels[l].recompute_orbit(degree);
                        }
                        i = j;
                        added = true;
                    }
                }
            }
            if (!added) {
                if (i == 0) break;
                --i;
            }
        }
    }

    chain.order = 1;
    for (const BsgsLevel& lvl : chain.levels) {
        std::uint64_t size = lvl.orbit.size();
        if (chain.order > std::numeric_limits<std::uint64_t>::max() / size)
            throw std::overflow_error("group order exceeds 64 bits");
        chain.order *= size;
    }
    return chain;
}

}  // namespace grouplen::detail
