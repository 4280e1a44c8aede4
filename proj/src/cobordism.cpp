#include "toric/cobordism.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

namespace {

CobordismSetup build_setup(std::vector<Int> q_neg, int zero_count, std::vector<Int> q_pos,
                           bool checked) {
    if (zero_count < 0) throw precondition_error("BadBlockSizes", "zero_count must be >= 0");
    for (const auto& q : q_neg) {
        if (q.sign() <= 0) throw precondition_error("BadBlockSizes", "weights must be positive");
    }
    for (const auto& q : q_pos) {
        if (q.sign() <= 0) throw precondition_error("BadBlockSizes", "weights must be positive");
    }
    const int d1 = static_cast<int>(q_neg.size());
    const int d2 = d1 + zero_count;
    const int n1 = d2 + static_cast<int>(q_pos.size());
    bool within = d1 >= 2 && !q_pos.empty();
    if (checked && !within) {
        throw precondition_error("BadBlockSizes",
                                 "need 1 < d1 <= d2 < n+1 (got d1=" + std::to_string(d1) +
                                     ", d2=" + std::to_string(d2) + ", n+1=" + std::to_string(n1) + ")");
    }
    if (q_neg.empty() || q_pos.empty()) {
        throw precondition_error("BadBlockSizes", "both weight blocks must be nonempty");
    }

    Int g = 0;
    for (const auto& q : q_neg) g = gcd(g, q);
    for (const auto& q : q_pos) g = gcd(g, q);
    bool normalized = g > Int(1);
    if (normalized) {
        for (auto& q : q_neg) q = q / g;
        for (auto& q : q_pos) q = q / g;
    }

    CobordismSetup s;
    s.n_plus_1 = n1;
    s.d1 = d1;
    s.d2 = d2;
    s.q_neg = std::move(q_neg);
    s.q_pos = std::move(q_pos);
    s.normalized_by_gcd = normalized;
    s.within_hypotheses = within;
    s.v.assign(static_cast<std::size_t>(n1), Int(0));
    for (int i = 0; i < d1; ++i) s.v[static_cast<std::size_t>(i)] = -s.q_neg[static_cast<std::size_t>(i)];
    for (int i = d2; i < n1; ++i) s.v[static_cast<std::size_t>(i)] = s.q_pos[static_cast<std::size_t>(i - d2)];
    return s;
}

} // namespace

CobordismSetup make_setup(std::vector<Int> q_neg, int zero_count, std::vector<Int> q_pos) {
    return build_setup(std::move(q_neg), zero_count, std::move(q_pos), true);
}

CobordismSetup make_setup_unchecked(std::vector<Int> q_neg, int zero_count,
                                    std::vector<Int> q_pos) {
    return build_setup(std::move(q_neg), zero_count, std::move(q_pos), false);
}

Cone orthant_cone(const CobordismSetup& setup) {
    std::vector<LatticeVector> gens;
    for (int i = 0; i < setup.n_plus_1; ++i) gens.push_back(unit_vector(setup.n_plus_1, i));
    return Cone::from_generators(std::move(gens), setup.n_plus_1);
}

Cone orthant_facet(const CobordismSetup& setup, int omitted) {
    std::vector<LatticeVector> gens;
    for (int i = 1; i <= setup.n_plus_1; ++i) {
        if (i == omitted) continue;
        gens.push_back(unit_vector(setup.n_plus_1, i - 1));
    }
    return Cone::from_generators(std::move(gens), setup.n_plus_1);
}

BFans fans_B(const CobordismSetup& setup) {
    // A face of the orthant survives on the plus side iff it does not contain
    // the entire positive coordinate block (the limit at 0 exists off that
    // stratum), and symmetrically on the minus side. Maximal survivors are
    // the facets omitting one coordinate of the corresponding block.
    std::vector<Cone> plus_max, minus_max;
    for (int i = setup.d2 + 1; i <= setup.n_plus_1; ++i) plus_max.push_back(orthant_facet(setup, i));
    for (int i = 1; i <= setup.d1; ++i) minus_max.push_back(orthant_facet(setup, i));
    return BFans{Fan::from_maximal_cones(setup.n_plus_1, plus_max),
                 Fan::from_maximal_cones(setup.n_plus_1, minus_max)};
}

CobordismFans quotient_fans(const CobordismSetup& setup, bool canonical_basis) {
    CobordismFans out;
    out.delta = orthant_cone(setup);
    BFans b = fans_B(setup);
    out.delta_plus = std::move(b.delta_plus);
    out.delta_minus = std::move(b.delta_minus);

    out.projection = quotient_projection(setup.v);
    if (canonical_basis) out.projection = canonicalize_projection(out.projection);

    out.delta_bar = project_cone(out.projection, out.delta);

    // Projecting the maximal cones and regenerating faces gives the same fan
    // as projecting every face: the projection is injective on the span of
    // each surviving facet, so faces of images are images of faces.
    auto project_fan = [&](const Fan& f) {
        std::vector<Cone> cones;
        cones.reserve(f.maximal_cones().size());
        for (const auto& c : f.maximal_cones()) cones.push_back(project_cone(out.projection, c));
        return Fan::from_maximal_cones(static_cast<int>(out.projection.n_rows()),
                                       std::move(cones));
    };
    out.quot_plus = project_fan(out.delta_plus);
    out.quot_minus = project_fan(out.delta_minus);

    auto facet_record = [&](int omitted) {
        QuotientConeRecord rec;
        rec.omitted_coordinate = omitted;
        std::vector<LatticeVector> raw;
        raw.reserve(static_cast<std::size_t>(setup.n_plus_1 - 1));
        for (int j = 1; j <= setup.n_plus_1; ++j) {
            if (j == omitted) continue;
            raw.push_back(out.projection.apply(unit_vector(setup.n_plus_1, j - 1)));
        }
        // index of the subgroup the raw images generate
        SnfResult s = snf(IntegerMatrix(raw));
        rec.image_index = 1;
        std::size_t k = std::min(s.d.n_rows(), s.d.n_cols());
        for (std::size_t t = 0; t < k; ++t) {
            if (!s.d.rows[t][t].is_zero()) rec.image_index *= s.d.rows[t][t];
        }
        rec.cone = Cone::from_generators(std::move(raw), static_cast<int>(out.projection.n_rows()));
        rec.cone_index = rec.cone.index();
        return rec;
    };
    for (int i = setup.d2 + 1; i <= setup.n_plus_1; ++i) out.sink_cones.push_back(facet_record(i));
    for (int i = 1; i <= setup.d1; ++i) out.source_cones.push_back(facet_record(i));

    const int n = setup.n_plus_1 - 1;
    auto check = [&](const Fan& quot, const char* side) {
        for (const auto& c : quot.maximal_cones()) {
            if (!c.is_simplicial() || c.dim() != n) {
                throw internal_error("SubdivisionCheckFailed",
                                     std::string("projected maximal cone on the ") + side +
                                         " side is not simplicial of full dimension");
            }
        }
        SubdivisionReport rep = verify_subdivision(quot.maximal_cones(), out.delta_bar);
        if (!rep.ok()) {
            throw internal_error("SubdivisionCheckFailed",
                                 std::string("projected fan on the ") + side +
                                     " side is not a subdivision of the image cone");
        }
        return rep;
    };
    out.subdivision_sink = check(out.quot_plus, "sink");
    out.subdivision_source = check(out.quot_minus, "source");
    return out;
}

FlipClassification classify_flip(const CobordismSetup& setup) {
    return classify_flip(setup, quotient_fans(setup));
}

FlipClassification classify_flip(const CobordismSetup& setup, const CobordismFans& fans) {
    FlipClassification cls;
    cls.within_hypotheses = setup.within_hypotheses;
    for (const auto& x : setup.v) {
        if (!x.is_zero()) cls.nonzero_weights.push_back(x);
    }
    std::sort(cls.nonzero_weights.begin(), cls.nonzero_weights.end(),
              [](const Int& a, const Int& b) { return a < b; });
    bool all_unit = true;
    for (const auto& w : cls.nonzero_weights) {
        if (w.abs() != Int(1)) all_unit = false;
    }
    cls.kind = all_unit ? FlipClassification::Kind::Atiyah : FlipClassification::Kind::NonEqualized;

    auto all_one = [](const std::vector<QuotientConeRecord>& recs, bool image) {
        for (const auto& r : recs) {
            if ((image ? r.image_index : r.cone_index) != Int(1)) return false;
        }
        return true;
    };
    cls.smooth_minus = all_one(fans.sink_cones, true);
    cls.smooth_plus = all_one(fans.source_cones, true);
    cls.variety_smooth_minus = all_one(fans.sink_cones, false);
    cls.variety_smooth_plus = all_one(fans.source_cones, false);

    if (all_unit != (cls.smooth_minus && cls.smooth_plus)) {
        throw internal_error("FlipDichotomy",
                             "weight and smoothness characterizations disagree");
    }
    return cls;
}

BundleFans bundle_fans(const CobordismSetup& setup) {
    LatticeVector minus_v = negate(setup.v);
    std::vector<Cone> plus_max, minus_max;
    for (int i = setup.d2 + 1; i <= setup.n_plus_1; ++i) {
        std::vector<LatticeVector> gens = orthant_facet(setup, i).generators();
        gens.push_back(minus_v);
        Cone c = Cone::from_generators(std::move(gens), setup.n_plus_1);
        if (!c.is_simplicial() || c.dim() != setup.n_plus_1) {
            throw internal_error("DegenerateCone", "plus-side bundle cone is degenerate");
        }
        plus_max.push_back(std::move(c));
    }
    for (int i = 1; i <= setup.d1; ++i) {
        std::vector<LatticeVector> gens = orthant_facet(setup, i).generators();
        gens.push_back(setup.v);
        Cone c = Cone::from_generators(std::move(gens), setup.n_plus_1);
        if (!c.is_simplicial() || c.dim() != setup.n_plus_1) {
            throw internal_error("DegenerateCone", "minus-side bundle cone is degenerate");
        }
        minus_max.push_back(std::move(c));
    }
    return BundleFans{Fan::from_maximal_cones(setup.n_plus_1, plus_max),
                      Fan::from_maximal_cones(setup.n_plus_1, minus_max)};
}

BordismFan bordism_fan(const CobordismSetup& setup) {
    return bordism_fan(setup, quotient_fans(setup));
}

BordismFan bordism_fan(const CobordismSetup& setup, const CobordismFans& fans) {
    BordismFan out;
    BundleFans bundles = bundle_fans(setup);
    out.lambda_plus = std::move(bundles.lambda_plus);
    out.lambda_minus = std::move(bundles.lambda_minus);

    std::vector<Cone> max_cones = out.lambda_plus.maximal_cones();
    max_cones.push_back(orthant_cone(setup));
    for (const auto& c : out.lambda_minus.maximal_cones()) max_cones.push_back(c);
    out.sigma_tilde = Fan::from_maximal_cones(setup.n_plus_1, max_cones);

    out.validation_plus = validate_fan(out.lambda_plus);
    out.validation_minus = validate_fan(out.lambda_minus);
    out.validation = validate_fan(out.sigma_tilde);
    if (!out.validation.valid() || !out.validation_plus.valid() || !out.validation_minus.valid()) {
        std::string detail = "assembled fan fails validation";
        if (!out.validation.pair_violations.empty()) {
            detail += ": " + out.validation.pair_violations.front().detail;
        }
        throw internal_error("FanValidationFailed", detail);
    }

    out.sink_fan = fans.quot_plus;
    out.source_fan = fans.quot_minus;
    out.inner_dim = setup.d2 - setup.d1;
    return out;
}

LimitResult limit_in_fan(const Fan& f, const Cone& sigma, const LatticeVector& w,
                         LimitDirection direction) {
    if (!f.contains_cone(sigma)) {
        throw precondition_error("ConeNotInFan", "sigma is not a cone of the fan");
    }
    LatticeVector dir = direction == LimitDirection::ToZero ? w : negate(w);

    // The limit lands in the minimal cone tau ⊇ sigma whose image in the
    // quotient by span(sigma) contains the image of the subgroup vector,
    // i.e. dir ∈ tau + span(sigma).
    std::vector<const Cone*> candidates;
    for (const auto& tau : f.cones()) {
        if (!tau.is_simplicial()) {
            throw precondition_error("NotSimplicial", "limit queries need simplicial fans");
        }
        // sigma must be a face of tau
        const auto& tg = tau.generators();
        bool face = true;
        for (const auto& g : sigma.generators()) {
            if (!std::binary_search(tg.begin(), tg.end(), g, lex_less)) {
                face = false;
                break;
            }
        }
        if (!face) continue;
        // dir ∈ tau + span(sigma): solve over tau's generator basis with the
        // sigma coordinates unconstrained.
        auto raw = tau.raw_coefficients(dir);
        if (!raw.in_span) continue;
        const int ds = raw.den.sign();
        bool ok = true;
        for (std::size_t j = 0; j < tg.size(); ++j) {
            bool in_sigma = std::binary_search(sigma.generators().begin(),
                                               sigma.generators().end(), tg[j], lex_less);
            if (!in_sigma && raw.numerators[j].sign() * ds < 0) {
                ok = false;
                break;
            }
        }
        if (ok) candidates.push_back(&tau);
    }
    if (candidates.empty()) return LimitResult{false, Cone()};

    const Cone* best = candidates.front();
    for (const Cone* c : candidates) {
        if (c->n_generators() < best->n_generators()) best = c;
    }
    // In a valid fan the minimal candidate is a face of every other one.
    for (const Cone* c : candidates) {
        const auto& cg = c->generators();
        for (const auto& g : best->generators()) {
            if (!std::binary_search(cg.begin(), cg.end(), g, lex_less)) {
                throw internal_error("LimitAmbiguous",
                                     "limit cone is not unique; the fan is invalid");
            }
        }
    }
    LimitResult res;
    res.exists = true;
    res.cone = *best;
    return res;
}

} // namespace toric
