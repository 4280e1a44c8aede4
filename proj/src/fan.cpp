#include "toric/fan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Lexicographic order of the generator lists, phrased on ray-index sequences
// (set bits from lowest ray upward, shorter prefix first). Rays are stored in
// lexicographic order, so this matches the generator-list order. At the
// lowest differing bit d, the mask holding d carries the smaller entry there
// and wins unless the other mask has no entries at or beyond d.
bool mask_sequence_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    std::uint64_t d = diff & (~diff + 1);
    if (a & d) return (b & ~(d - 1)) != 0;
    return (a & ~(d - 1)) == 0;
}

} // namespace

struct Fan::Data {
    int ambient = 0;
    std::vector<LatticeVector> rays;       // sorted, deduplicated
    std::vector<std::uint64_t> masks;      // every cone, in mask-sequence order
    std::vector<std::uint64_t> masks_numeric; // same set, numerically sorted
    std::vector<Cone> maximal;             // parallel to maximal_masks
    std::vector<std::uint64_t> maximal_masks;
    bool all_simplicial = true;

    mutable std::once_flag cones_once;
    mutable std::vector<Cone> cones; // materialized lazily, same order as masks
    mutable std::atomic<bool> closed_checked{false};

    std::size_t ray_index(const LatticeVector& g) const {
        auto it = std::lower_bound(rays.begin(), rays.end(), g, lex_less);
        if (it == rays.end() || *it != g) return rays.size();
        return static_cast<std::size_t>(it - rays.begin());
    }

    bool mask_present(std::uint64_t m) const {
        auto it = std::lower_bound(masks_numeric.begin(), masks_numeric.end(), m);
        return it != masks_numeric.end() && *it == m;
    }

    void index_masks() {
        masks_numeric = masks;
        std::sort(masks_numeric.begin(), masks_numeric.end());
    }

    void build_ray_table(const std::vector<Cone>& sources) {
        for (const auto& c : sources) {
            for (const auto& g : c.generators()) rays.push_back(g);
        }
        std::sort(rays.begin(), rays.end(), lex_less);
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        if (rays.size() > 64) {
            throw precondition_error("TooManyRays", "fan exceeds the 64-ray representation limit");
        }
    }

    std::uint64_t mask_of(const Cone& c) const {
        std::uint64_t m = 0;
        for (const auto& g : c.generators()) {
            m |= std::uint64_t(1) << ray_index(g);
        }
        return m;
    }

    void compute_maximal(const std::vector<Cone>& all,
                         const std::vector<std::uint64_t>& all_masks) {
        for (std::size_t i = 0; i < all.size(); ++i) {
            bool face_of_other = false;
            for (std::size_t j = 0; j < all.size() && !face_of_other; ++j) {
                if (i == j || all_masks[i] == all_masks[j]) continue;
                if ((all_masks[i] & all_masks[j]) == all_masks[i]) face_of_other = true;
            }
            if (!face_of_other) {
                maximal.push_back(all[i]);
                maximal_masks.push_back(all_masks[i]);
            }
        }
    }

    const std::vector<Cone>& materialized() const {
        std::call_once(cones_once, [this] {
            cones.reserve(masks.size());
            for (std::uint64_t m : masks) {
                // find a maximal cone containing this face and slice it
                const Cone* host = nullptr;
                std::uint64_t host_mask = 0;
                for (std::size_t i = 0; i < maximal.size(); ++i) {
                    if ((m & maximal_masks[i]) == m) {
                        host = &maximal[i];
                        host_mask = maximal_masks[i];
                        break;
                    }
                }
                if (host == nullptr) {
                    throw internal_error("FanData", "face mask without a hosting maximal cone");
                }
                std::vector<int> local;
                int pos = 0;
                for (std::uint64_t bit = host_mask; bit != 0; bit &= bit - 1, ++pos) {
                    if (m & (bit & (~bit + 1))) local.push_back(pos);
                }
                cones.push_back(host->face(local));
            }
        });
        return cones;
    }
};

Fan::Fan() : data_(std::make_shared<Data>()) {}

int Fan::ambient_rank() const { return data_->ambient; }
const std::vector<Cone>& Fan::cones() const { return data_->materialized(); }
const std::vector<Cone>& Fan::maximal_cones() const { return data_->maximal; }
const std::vector<LatticeVector>& Fan::rays() const { return data_->rays; }
std::size_t Fan::size() const { return data_->masks.size(); }
bool Fan::closed_under_faces() const { return data_->closed_checked.load(); }

bool operator==(const Fan& a, const Fan& b) {
    return a.data_->ambient == b.data_->ambient && a.data_->rays == b.data_->rays &&
           a.data_->masks == b.data_->masks;
}

bool Fan::contains_cone(const Cone& c) const {
    if (c.ambient_rank() != data_->ambient) return false;
    std::uint64_t m = 0;
    for (const auto& g : c.generators()) {
        std::size_t idx = data_->ray_index(g);
        if (idx == data_->rays.size()) return false;
        m |= std::uint64_t(1) << idx;
    }
    return data_->mask_present(m);
}


Fan Fan::from_cones(int ambient_rank, std::vector<Cone> cones) {
    auto d = std::make_shared<Data>();
    d->ambient = ambient_rank;
    for (const auto& c : cones) {
        if (c.ambient_rank() != ambient_rank) {
            throw precondition_error("ShapeMismatch", "fan cones must share the ambient rank");
        }
        if (!c.is_simplicial()) d->all_simplicial = false;
    }
    d->build_ray_table(cones);

    std::vector<std::pair<std::uint64_t, std::size_t>> order(cones.size());
    for (std::size_t i = 0; i < cones.size(); ++i) order[i] = {d->mask_of(cones[i]), i};
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return mask_sequence_less(a.first, b.first);
    });
    std::vector<Cone> sorted;
    std::vector<std::uint64_t> sorted_masks;
    for (const auto& [m, idx] : order) {
        if (!sorted_masks.empty() && sorted_masks.back() == m) continue;
        sorted_masks.push_back(m);
        sorted.push_back(std::move(cones[idx]));
    }
    d->masks = sorted_masks;
    d->index_masks();
    d->compute_maximal(sorted, sorted_masks);
    // eager: the cone list is already at hand
    std::call_once(d->cones_once, [&] { d->cones = std::move(sorted); });

    Fan f;
    f.data_ = std::move(d);
    return f;
}

Fan Fan::from_maximal_cones(int ambient_rank, const std::vector<Cone>& maximal) {
    auto d = std::make_shared<Data>();
    d->ambient = ambient_rank;
    std::vector<Cone> cleaned;
    for (const auto& c : maximal) {
        if (c.ambient_rank() != ambient_rank) {
            throw precondition_error("ShapeMismatch", "fan cones must share the ambient rank");
        }
        if (!c.is_simplicial()) {
            throw precondition_error("NotSimplicial",
                                     "face closure is generated for simplicial cones only");
        }
        cleaned.push_back(c);
    }
    d->build_ray_table(cleaned);

    std::vector<std::uint64_t> input_masks;
    input_masks.reserve(cleaned.size());
    for (const auto& c : cleaned) input_masks.push_back(d->mask_of(c));
    d->compute_maximal(cleaned, input_masks);

    // all faces, as submasks of the maximal masks
    std::vector<std::uint64_t> face_masks;
    for (std::uint64_t m : d->maximal_masks) {
        std::uint64_t sub = m;
        while (true) {
            face_masks.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
    }
    std::sort(face_masks.begin(), face_masks.end(), mask_sequence_less);
    face_masks.erase(std::unique(face_masks.begin(), face_masks.end()), face_masks.end());
    d->masks = std::move(face_masks);
    d->index_masks();

    Fan f;
    f.data_ = std::move(d);
    return f;
}

Fan Fan::face_fan(const Cone& c) { return from_maximal_cones(c.ambient_rank(), {c}); }

ValidationReport validate_fan(const Fan& f, bool all_pairs) {
    ValidationReport report;
    const Fan::Data& d = *f.data_;

    // Face closure: every facet of every member must be a member (by
    // induction this covers all faces). Simplicial members have one facet per
    // dropped generator, which the mask table answers directly.
    if (d.all_simplicial) {
        for (std::uint64_t m : d.masks) {
            for (std::uint64_t bit = m; bit != 0; bit &= bit - 1) {
                std::uint64_t facet = m & ~(bit & (~bit + 1));
                if (!d.mask_present(facet)) {
                    // materialize just the offending pair for the report
                    const auto& all = f.cones();
                    for (std::size_t i = 0; i < d.masks.size(); ++i) {
                        if (d.masks[i] != m) continue;
                        for (const auto& fc : all[i].facets()) {
                            if (!f.contains_cone(fc)) {
                                report.closure_violations.push_back(FanIssue{
                                    "MissingFace",
                                    "facet " + fc.to_string() + " of " + all[i].to_string() +
                                        " is not in the fan",
                                    all[i], fc, RationalVector{}});
                            }
                        }
                    }
                    break;
                }
            }
        }
    } else {
        for (const auto& c : f.cones()) {
            for (const auto& facet : c.facets()) {
                if (!f.contains_cone(facet)) {
                    report.closure_violations.push_back(
                        FanIssue{"MissingFace",
                                 "facet " + facet.to_string() + " of " + c.to_string() +
                                     " is not in the fan",
                                 c, facet, RationalVector{}});
                }
            }
        }
    }

    // Pairwise compatibility. For a face-closed family it suffices to test
    // maximal cones: faces of a common face are again common faces.
    const auto& pool = all_pairs ? f.cones() : f.maximal_cones();
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            CommonFaceResult res = common_face(pool[i], pool[j]);
            if (!res.is_common_face) {
                report.pair_violations.push_back(
                    FanIssue{"BadPair",
                             pool[i].to_string() + " and " + pool[j].to_string() +
                                 " do not meet in a common face",
                             pool[i], pool[j], res.witness});
            }
        }
    }

    if (report.closure_violations.empty()) d.closed_checked.store(true);
    return report;
}

namespace {

// Facet record of a full-dimensional simplicial piece: the facet generators
// (canonically sorted) and a normal that is >= 0 on the piece and vanishes on
// the facet.
struct FacetRecord {
    std::vector<LatticeVector> gens;
    LatticeVector inward_normal;
    std::size_t piece;
};

} // namespace

SubdivisionReport verify_subdivision(const std::vector<Cone>& pieces, const Cone& whole) {
    SubdivisionReport rep;
    const int r = whole.ambient_rank();

    rep.simplicial_full_dim = true;
    for (const auto& p : pieces) {
        if (!p.is_simplicial() || p.dim() != r) {
            rep.simplicial_full_dim = false;
            rep.issues.push_back("piece " + p.to_string() + " is not simplicial full-dimensional");
        }
    }

    rep.contained = true;
    for (const auto& p : pieces) {
        if (!whole.contains_cone(p)) {
            rep.contained = false;
            rep.issues.push_back("piece " + p.to_string() + " is not contained in " + whole.to_string());
        }
    }

    rep.pairwise_ok = true;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            CommonFaceResult res = common_face(pieces[i], pieces[j]);
            if (!res.is_common_face) {
                rep.pairwise_ok = false;
                rep.issues.push_back("pieces " + pieces[i].to_string() + " and " +
                                     pieces[j].to_string() + " overlap beyond a common face");
            }
        }
    }

    // Exact cover: each facet of each piece lies on the boundary of `whole`
    // or is shared by exactly one other piece on the opposite side. Together
    // with containment and disjoint interiors this certifies that the union
    // is all of `whole`.
    rep.facets_matched = rep.simplicial_full_dim;
    if (rep.simplicial_full_dim) {
        // tightness table: distinct ray x boundary inequality, computed once
        std::vector<LatticeVector> piece_rays;
        for (const auto& p : pieces) {
            for (const auto& g : p.generators()) piece_rays.push_back(g);
        }
        std::sort(piece_rays.begin(), piece_rays.end(), lex_less);
        piece_rays.erase(std::unique(piece_rays.begin(), piece_rays.end()), piece_rays.end());
        const DualDescription& wd = whole.dual();
        std::vector<std::vector<bool>> tight_table(wd.inequalities.size());
        for (std::size_t q = 0; q < wd.inequalities.size(); ++q) {
            tight_table[q].resize(piece_rays.size());
            for (std::size_t r = 0; r < piece_rays.size(); ++r) {
                tight_table[q][r] = dot(wd.inequalities[q], piece_rays[r]).is_zero();
            }
        }
        auto ray_id = [&](const LatticeVector& g) {
            return static_cast<std::size_t>(
                std::lower_bound(piece_rays.begin(), piece_rays.end(), g, lex_less) -
                piece_rays.begin());
        };

        std::map<std::vector<LatticeVector>, std::vector<FacetRecord>> by_facet;
        for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
            const auto& p = pieces[pi];
            const auto& duals = p.generator_duals();
            for (std::size_t drop = 0; drop < p.n_generators(); ++drop) {
                FacetRecord rec;
                for (std::size_t g = 0; g < p.n_generators(); ++g) {
                    if (g != drop) rec.gens.push_back(p.generators()[g]);
                }
                rec.inward_normal = duals[drop];
                rec.piece = pi;
                by_facet[rec.gens].push_back(std::move(rec));
            }
        }
        for (const auto& [gens, records] : by_facet) {
            bool on_boundary = false;
            for (std::size_t q = 0; q < wd.inequalities.size() && !on_boundary; ++q) {
                bool tight = true;
                for (const auto& g : gens) {
                    if (!tight_table[q][ray_id(g)]) {
                        tight = false;
                        break;
                    }
                }
                if (tight) on_boundary = true;
            }
            if (records.size() == 1) {
                if (!on_boundary) {
                    rep.facets_matched = false;
                    rep.issues.push_back("unmatched interior facet of piece " +
                                         pieces[records[0].piece].to_string());
                }
            } else if (records.size() == 2) {
                // The two pieces must sit on opposite sides of the facet.
                const Cone& other = pieces[records[1].piece];
                bool other_on_negative_side = false;
                for (const auto& g : other.generators()) {
                    if (dot(records[0].inward_normal, g).sign() < 0) {
                        other_on_negative_side = true;
                        break;
                    }
                }
                if (!other_on_negative_side) {
                    rep.facets_matched = false;
                    rep.issues.push_back("pieces meet a shared facet from the same side");
                }
            } else {
                rep.facets_matched = false;
                rep.issues.push_back("facet shared by more than two pieces");
            }
        }
    }

    // Deterministic sample membership: small positive combinations of the
    // generators of `whole` must land in some piece.
    rep.sample_covered = true;
    std::vector<LatticeVector> samples;
    const auto& wg = whole.generators();
    if (!wg.empty()) {
        LatticeVector total(static_cast<std::size_t>(r), Int(0));
        for (const auto& g : wg) total = add(total, g);
        samples.push_back(total);
        for (std::size_t i = 0; i < wg.size(); ++i) {
            samples.push_back(wg[i]);
            for (std::size_t j = i + 1; j < wg.size(); ++j) {
                samples.push_back(add(wg[i], wg[j]));
            }
        }
    }
    for (const auto& s : samples) {
        bool covered = false;
        for (const auto& p : pieces) {
            if (p.contains(s)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            rep.sample_covered = false;
            rep.issues.push_back("sample point " + to_string(s) + " is not covered");
        }
    }

    return rep;
}

} // namespace toric
