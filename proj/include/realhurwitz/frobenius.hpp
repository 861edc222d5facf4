#pragma once

#include "realhurwitz/centeralg.hpp"

#include <map>
#include <string>
#include <vector>

namespace realhurwitz {

// Linear map from the m-th to the n-th tensor power of the center, written in
// the idempotent basis. A key lists the spectral indices of the m input slots
// followed by the n output slots; missing keys are zero.
class TqftMap {
public:
    using Key = std::vector<std::size_t>;

    TqftMap(GroupHandle g, int inputs, int outputs);

    const GroupHandle& group() const { return group_; }
    int inputs() const { return inputs_; }
    int outputs() const { return outputs_; }
    const std::map<Key, Rational>& entries() const { return entries_; }

    Rational at(const Key& key) const;
    void set(const Key& key, const Rational& value);

    bool is_diagonal() const;
    // Diagonal value on rho (all slots equal to rho).
    Rational diagonal(std::size_t rho) const { return at(Key(inputs_ + outputs_, rho)); }

    bool operator==(const TqftMap& other) const;

private:
    GroupHandle group_;
    int inputs_;
    int outputs_;
    std::map<Key, Rational> entries_;
};

enum class SurfaceKind { ClassicalOriented, Doublet, ConnectedReal };

struct SurfaceDescriptor {
    SurfaceKind kind = SurfaceKind::ConnectedReal;
    int genus = 0;
    int inputs = 0;
    int outputs = 0;
    // Doublet only: slots (inputs first, then outputs) whose marked point lies
    // in the non-canonical half; the remaining slots form the other part.
    std::vector<int> marked;
};

// Z of a surface with the given boundary data.
//   classical / canonical doublet: diag (dim/#G)^{2 - 2g - 2n}
//   marked doublet: the same with Omega applied at the marked slots
//   connected Real: diag over rho = rho^T of (SFS dim/#G)^{1 - g - 2n}
TqftMap z_map(const GroupHandle& g, const SurfaceDescriptor& s);

TqftMap identity_map(const GroupHandle& g);
TqftMap omega(const GroupHandle& g);
TqftMap product_map(const GroupHandle& g);     // 2 in, 1 out
TqftMap unit_map(const GroupHandle& g);        // 0 in, 1 out
TqftMap pairing_map(const GroupHandle& g);     // 2 in, 0 out
TqftMap copairing_map(const GroupHandle& g);   // 0 in, 2 out: Delta
// x -> x * w for a central element w.
TqftMap multiplication_by(const CenterElement& w);
// A vector (0 in, 1 out).
TqftMap vector_map(const CenterElement& w);
CenterElement as_vector(const TqftMap& f);

// Spectral coordinates SFS(rho) #G / dim(rho).
CenterElement u_vector(const GroupHandle& g);

// Glue output links[i].first of f to input links[i].second of g. The result
// has f's inputs then g's unlinked inputs, and f's unlinked outputs then g's outputs.
TqftMap compose(const TqftMap& f, const TqftMap& g, const std::vector<std::pair<int, int>>& links);
// Glue output `out` of f to its own input `in`.
TqftMap trace(const TqftMap& f, int out, int in);
// Disjoint union.
TqftMap tensor(const TqftMap& f, const TqftMap& g);
// Apply Omega at one slot (inputs first, then outputs).
TqftMap apply_omega(const TqftMap& f, int slot);

// Coefficients in the class basis, keyed like TqftMap: class ids of the inputs
// (the map is applied to c_{a_1} (x) ... ) and of the outputs.
std::map<std::vector<std::size_t>, Rational> to_class_basis(const TqftMap& f);

std::string to_string(const TqftMap& f);

struct AxiomCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<AxiomCheck> verify_extended_axioms(const GroupHandle& g);

struct FunctorialityReport {
    bool equal = false;
    TqftMap original;
    TqftMap glued;
};

// Degeneration of a connected Real surface (genus, m inputs, n outputs):
//  'a': g = h + h' + 1, splitting inputs/outputs as (m1, n1) | rest
//  'b': g = h + 2h', splitting as in (a), the second piece a canonical doublet
//  'c': g = h + 2, a self-gluing
//  'd': g = 2h + 1, self-gluing of a doublet through Omega
// For (a) and (b), h is the genus of the Real piece; m1, n1 its share of slots.
FunctorialityReport verify_functoriality(const GroupHandle& g, const SurfaceDescriptor& s, char type, int h = 0,
                                         int m1 = 0, int n1 = 0);

// Z of a connected Real surface rebuilt as: multiply the inputs, act by
// U^{k+1} K^h, then comultiply to the outputs; g = 2h + k.
TqftMap glued_real_surface(const GroupHandle& g, int h, int k, int inputs, int outputs);

}  // namespace realhurwitz
