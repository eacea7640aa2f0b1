#include "flagcode/codes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flagcode {

WMatrixFamily build_w_family(const Spread& spread) {
    if (!spread.is_planar()) throw Error(ErrorCode::NotPlanar, "W matrices need a spread of F_q^{2k}");
    const auto& s = spread.generators();
    WMatrixFamily w;
    w.matrices.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        Matrix wi = stack(s[i], s[(i + 1) % s.size()]);
        if (rank(wi) != spread.n())
            throw Error(ErrorCode::RankDeficient, "W_" + std::to_string(i + 1) + " is singular; spread is corrupted");
        w.matrices.push_back(std::move(wi));
    }
    return w;
}

FlagCode full_flag_code_from_spread(const Spread& spread) {
    auto w = build_w_family(spread);
    return FlagCode::from_generators(FlagType::full(spread.n()), std::move(w.matrices), Provenance::FullFromSpread,
                                     "q=" + std::to_string(spread.field()->q()) + " k=" + std::to_string(spread.k()));
}

FlagCode construct_full_flag_code(const FieldPtr& field, std::size_t k) {
    return full_flag_code_from_spread(build_spread(field, k, 2 * k));
}

bool ConstructionReport::ok() const noexcept {
    return !projections.empty() && std::all_of(projections.begin(), projections.end(),
                                                [](const ProjectionCheck& p) { return p.ok; });
}

ConstructionReport verify_projected_structure(const FlagCode& code) {
    if (!code.type().is_full() || code.ambient() % 2 != 0)
        throw Error(ErrorCode::TypeMismatch, "construction check needs a full flag code on F_q^{2k}");
    ConstructionReport r;
    r.k = code.ambient() / 2;
    r.code_size = code.size();
    for (std::size_t j = 1; j < code.ambient(); ++j) {
        ProjectionCheck pc;
        pc.j = j;
        pc.expected_intersection = j <= r.k ? 0 : 2 * (j - r.k);
        const auto cj = projected_code(code, j);
        pc.size = cj.size();
        pc.min_intersection = SIZE_MAX;
        pc.max_intersection = 0;
        for (std::size_t a = 0; a < cj.size(); ++a)
            for (std::size_t b = a + 1; b < cj.size(); ++b) {
                const std::size_t d = intersection_dim(cj[a], cj[b]);
                pc.min_intersection = std::min(pc.min_intersection, d);
                pc.max_intersection = std::max(pc.max_intersection, d);
            }
        if (cj.size() < 2) pc.min_intersection = 0;
        pc.ok = pc.size == code.size() && pc.min_intersection == pc.expected_intersection &&
                pc.max_intersection == pc.expected_intersection;
        r.projections.push_back(pc);
    }
    return r;
}

FlagCode puncture(const FlagCode& code, const FlagType& type) {
    if (type.ambient() != code.ambient()) throw Error(ErrorCode::TypeNotSubset, "puncture type lives in another space");
    std::vector<std::size_t> positions;
    for (std::size_t t : type.dims()) {
        const auto& dims = code.type().dims();
        auto it = std::find(dims.begin(), dims.end(), t);
        if (it == dims.end())
            throw Error(ErrorCode::TypeNotSubset, "dimension " + std::to_string(t) + " is not in the code type");
        positions.push_back(static_cast<std::size_t>(it - dims.begin()));
    }

    std::vector<Flag> flags;
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < code.size(); ++i) {
        std::vector<Subspace> subs;
        for (std::size_t p : positions) subs.push_back(code.flag(i)[p]);
        Flag f(type, std::move(subs));
        if (std::find(flags.begin(), flags.end(), f) != flags.end()) continue;
        flags.push_back(std::move(f));
        gens.push_back(row_prefix(code.generator(i), type.dims().back()));
    }
    if (flags.size() < 2) throw Error(ErrorCode::CodeTooSmall, "puncturing collapsed the code to one flag");
    FlagCode out = FlagCode::from_generators(type, std::move(gens), Provenance::Punctured,
                                             std::string(to_string(code.provenance())) + " (" +
                                                 code.type().to_string() + ") -> (" + type.to_string() + ")");
    if (code.provenance() == Provenance::FullFromSpread && !is_optimum_distance(out).optimum)
        throw std::logic_error("puncturing an optimum distance code lost optimality");
    return out;
}

FlagCode divisor_type_code(const FieldPtr& field, const FlagType& type) {
    const std::size_t tr = type.dims().back();
    if (type.ambient() % tr != 0)
        throw Error(ErrorCode::NotDivisor,
                    std::to_string(tr) + " does not divide " + std::to_string(type.ambient()));
    Spread spread = build_spread(field, tr, type.ambient());
    FlagCode out = FlagCode::from_generators(type, spread.generators(), Provenance::DivisorType,
                                             "q=" + std::to_string(field->q()) + " n=" +
                                                 std::to_string(type.ambient()) + " type=" + type.to_string());
    if (!is_optimum_distance(out).optimum) throw std::logic_error("divisor-type code is not optimum distance");
    return out;
}

AdmissibilityVerdict check_spread_projection_dimension(std::uint64_t q, std::size_t n, std::size_t k) {
    if (k == 0 || k >= n || n % k != 0)
        throw Error(ErrorCode::NotDivisor, std::to_string(k) + " is not a proper divisor of " + std::to_string(n));
    AdmissibilityVerdict v;
    v.s = n / k;
    v.spread_size = partial_spread_bound(q, k, n);
    if (v.s == 2) {
        v.admissible = true;
        v.reason = "n = 2k";
        return v;
    }
    if (n == 3 && k == 1) {
        v.admissible = true;
        v.special_case = true;
        v.reason = "n = 3, k = 1 special case (no construction provided)";
        return v;
    }
    v.next_bound = partial_spread_bound(q, k + 1, n);
    v.admissible = false;
    v.reason = "the (k+1)-projected code would be a partial spread of size " + std::to_string(v.spread_size) +
               " but partial spreads of dimension " + std::to_string(k + 1) + " have at most " +
               std::to_string(v.next_bound) + " members";
    return v;
}

std::size_t Graph::degree(std::size_t v) const noexcept {
    std::size_t d = 0;
    for (std::size_t u = 0; u < n_; ++u) d += adjacent(v, u);
    return d;
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::size_t maximum() {
        best_ = 0;
        mode_ = Mode::Maximum;
        run();
        return best_;
    }

    std::vector<std::vector<std::size_t>> collect(std::size_t size, std::size_t limit) {
        target_ = size;
        limit_ = limit;
        found_.clear();
        mode_ = Mode::Collect;
        if (limit > 0) run();
        return found_;
    }

private:
    enum class Mode { Maximum, Collect };

    void run() {
        std::vector<std::size_t> order(g_.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::size_t> deg(g_.size());
        for (std::size_t v = 0; v < g_.size(); ++v) deg[v] = g_.degree(v);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
        std::vector<std::size_t> current;
        expand(current, order);
    }

    // Greedy sequential coloring; returns P reordered by color with the
    // running color number (an upper bound on the clique size within the prefix).
    void color_sort(const std::vector<std::size_t>& p, std::vector<std::size_t>& sorted,
                    std::vector<std::size_t>& bound) const {
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t v : p) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (std::size_t u : classes[c])
                    if (g_.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        sorted.clear();
        bound.clear();
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (std::size_t v : classes[c]) {
                sorted.push_back(v);
                bound.push_back(c + 1);
            }
    }

    bool done() const { return mode_ == Mode::Collect && found_.size() >= limit_; }

    void expand(std::vector<std::size_t>& current, const std::vector<std::size_t>& p) {
        std::vector<std::size_t> sorted, bound;
        color_sort(p, sorted, bound);
        for (std::size_t i = sorted.size(); i-- > 0;) {
            if (done()) return;
            const std::size_t reach = current.size() + bound[i];
            if (mode_ == Mode::Maximum ? reach <= best_ : reach < target_) return;

            const std::size_t v = sorted[i];
            current.push_back(v);
            std::vector<std::size_t> next;
            for (std::size_t j = 0; j < i; ++j)
                if (g_.adjacent(v, sorted[j])) next.push_back(sorted[j]);

            if (mode_ == Mode::Maximum) {
                if (current.size() > best_) best_ = current.size();
                if (!next.empty()) expand(current, next);
            } else if (current.size() == target_) {
                auto c = current;
                std::sort(c.begin(), c.end());
                found_.push_back(std::move(c));
            } else if (!next.empty()) {
                expand(current, next);
            }
            current.pop_back();
        }
    }

    const Graph& g_;
    Mode mode_ = Mode::Maximum;
    std::size_t best_ = 0;
    std::size_t target_ = 0;
    std::size_t limit_ = 0;
    std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::size_t max_clique_size(const Graph& g) { return CliqueSearch(g).maximum(); }

std::vector<std::vector<std::size_t>> cliques_of_size(const Graph& g, std::size_t size, std::size_t limit) {
    return CliqueSearch(g).collect(size, limit);
}

bool MaximalityReport::all_witnesses_spreads() const noexcept {
    return !witness_spread_reports.empty() &&
           std::all_of(witness_spread_reports.begin(), witness_spread_reports.end(),
                       [](const SpreadReport& r) { return r.ok(); });
}

MaximalityReport maximality_oracle(const FieldPtr& field, std::size_t n, std::size_t max_witnesses) {
    if (n < 2 || n % 2 != 0) throw Error(ErrorCode::NotPlanar, "maximality oracle needs n = 2k");
    const auto flags = enumerate_full_flags(field, n);
    if (flags.size() > kMaxOracleFlags)
        throw Error(ErrorCode::TooLarge, std::to_string(flags.size()) + " full flags exceed the oracle bound");

    MaximalityReport r;
    r.vertices = flags.size();
    r.distance = max_flag_distance_bound(FlagType::full(n));
    // both orientations (and the diagonal) are computed so the symmetry and
    // loop checks below test the distance function rather than the fill loop
    Graph g(flags.size());
    for (std::size_t a = 0; a < flags.size(); ++a)
        for (std::size_t b = 0; b < flags.size(); ++b) g.set(a, b, flag_distance(flags[a], flags[b]) == r.distance);

    r.symmetric = true;
    r.loop_free = true;
    for (std::size_t a = 0; a < flags.size(); ++a) {
        if (g.adjacent(a, a)) r.loop_free = false;
        for (std::size_t b = a + 1; b < flags.size(); ++b) {
            if (g.adjacent(a, b) != g.adjacent(b, a)) r.symmetric = false;
            if (g.adjacent(a, b)) ++r.edges;
        }
    }

    r.clique_number = max_clique_size(g);
    r.witnesses = cliques_of_size(g, r.clique_number, max_witnesses);
    const std::size_t k = n / 2;
    for (const auto& clique : r.witnesses) {
        std::vector<Matrix> gens;
        for (std::size_t v : clique) gens.push_back(flags[v][k - 1].basis());
        r.witness_spread_reports.push_back(verify_spread(Spread(field, n, k, std::move(gens))));
    }
    return r;
}

}  // namespace flagcode
