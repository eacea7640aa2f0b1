#include "flagcode/flags.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace flagcode {

FlagType::FlagType(std::size_t n, std::vector<std::size_t> dims) : n_(n), dims_(std::move(dims)) {
    if (dims_.empty()) throw Error(ErrorCode::InvalidArgument, "flag type needs at least one dimension");
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i] == 0 || dims_[i] >= n_)
            throw Error(ErrorCode::InvalidArgument, "flag type dimensions must lie in (0, n)");
        if (i > 0 && dims_[i] <= dims_[i - 1])
            throw Error(ErrorCode::InvalidArgument, "flag type dimensions must be strictly increasing");
    }
}

FlagType FlagType::full(std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "full flags need n >= 2");
    std::vector<std::size_t> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) d[i] = i + 1;
    return FlagType(n, std::move(d));
}

FlagType FlagType::parse(std::size_t n, const std::string& text) {
    std::vector<std::size_t> dims;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorCode::InvalidArgument, "malformed type vector '" + text + "'");
        dims.push_back(std::stoul(item));
    }
    return FlagType(n, std::move(dims));
}

std::string FlagType::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(dims_[i]);
    }
    return s;
}

Flag::Flag(FlagType type, std::vector<Subspace> subspaces) : type_(std::move(type)), subspaces_(std::move(subspaces)) {
    if (subspaces_.size() != type_.length())
        throw Error(ErrorCode::TypeMismatch, "flag length differs from its type");
    for (std::size_t i = 0; i < subspaces_.size(); ++i) {
        if (subspaces_[i].ambient() != type_.ambient())
            throw Error(ErrorCode::AmbientMismatch, "flag subspace in wrong ambient space");
        if (subspaces_[i].dim() != type_.dim(i))
            throw Error(ErrorCode::TypeMismatch, "flag subspace dimension differs from type");
        if (i > 0 && !subspaces_[i].contains(subspaces_[i - 1]))
            throw Error(ErrorCode::InvalidArgument, "flag subspaces are not nested");
    }
}

Flag Flag::from_generator(const FlagType& type, const Matrix& generator) {
    if (generator.cols() != type.ambient())
        throw Error(ErrorCode::DimensionMismatch, "generator width differs from ambient dimension");
    if (generator.rows() < type.dims().back())
        throw Error(ErrorCode::DimensionMismatch, "generator has fewer rows than the largest dimension");
    std::vector<Subspace> subs;
    subs.reserve(type.length());
    for (std::size_t t : type.dims()) {
        Subspace s = Subspace::from_matrix(row_prefix(generator, t));
        if (s.dim() != t) throw Error(ErrorCode::RankDeficient, "generator prefix is rank deficient");
        subs.push_back(std::move(s));
    }
    return Flag(type, std::move(subs));
}

bool Flag::operator<(const Flag& rhs) const noexcept {
    return std::lexicographical_compare(subspaces_.begin(), subspaces_.end(), rhs.subspaces_.begin(),
                                        rhs.subspaces_.end());
}

StutteringFlag::StutteringFlag(FlagType type, std::vector<Subspace> subspaces)
    : type_(std::move(type)), subspaces_(std::move(subspaces)) {
    if (subspaces_.size() != type_.length())
        throw Error(ErrorCode::TypeMismatch, "stuttering flag length differs from its type");
    for (std::size_t i = 0; i < subspaces_.size(); ++i) {
        if (subspaces_[i].ambient() != type_.ambient())
            throw Error(ErrorCode::AmbientMismatch, "stuttering flag subspace in wrong ambient space");
        if (subspaces_[i].dim() > type_.dim(i))
            throw Error(ErrorCode::TypeMismatch, "stuttering flag subspace exceeds type dimension");
        if (i > 0 && !subspaces_[i].contains(subspaces_[i - 1]))
            throw Error(ErrorCode::InvalidArgument, "stuttering flag is not weakly nested");
    }
}

std::size_t flag_distance(const Flag& a, const Flag& b) {
    if (!(a.type() == b.type())) throw Error(ErrorCode::TypeMismatch, "flags of different types");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.subspaces().size(); ++i) d += subspace_distance(a[i], b[i]);
    return d;
}

std::size_t flag_distance(const Flag& a, const StutteringFlag& x) {
    if (a.type().ambient() != x.type().ambient() || a.type().length() != x.type().length())
        throw Error(ErrorCode::TypeMismatch, "stuttering flag does not match the flag type");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.subspaces().size(); ++i) d += subspace_distance(a[i], x[i]);
    return d;
}

std::size_t max_subspace_distance(std::size_t n, std::size_t t) noexcept { return 2 * std::min(t, n - t); }

std::size_t max_flag_distance_bound(const FlagType& type) noexcept {
    const std::size_t n = type.ambient();
    std::size_t s = 0;
    for (std::size_t t : type.dims()) s += (t <= n / 2) ? t : n - t;
    return 2 * s;
}

Matrix adapted_generator(const Flag& flag) {
    const std::size_t n = flag.type().ambient();
    Matrix gen(flag.field(), 0, n);
    Subspace span = Subspace::zero(flag.field(), n);
    for (const Subspace& s : flag.subspaces()) {
        for (std::size_t r = 0; r < s.dim() && span.dim() < s.dim(); ++r) {
            auto row = s.basis().row(r);
            if (span.contains_vector(row)) continue;
            Matrix v(flag.field(), 1, n, std::vector<Elem>(row.begin(), row.end()));
            gen = stack(gen, v);
            span = Subspace::from_matrix(gen);
        }
    }
    return gen;
}

Flag random_flag(const FieldPtr& field, const FlagType& type, SplitMix64& rng) {
    const std::size_t n = type.ambient();
    const std::size_t rows = type.dims().back();
    Matrix gen(field, 0, n);
    while (gen.rows() < rows) {
        Matrix v(field, 1, n);
        for (std::size_t c = 0; c < n; ++c) v(0, c) = static_cast<Elem>(rng.uniform(field->q()));
        Matrix candidate = stack(gen, v);
        if (rank(candidate) == candidate.rows()) gen = std::move(candidate);
    }
    return Flag::from_generator(type, gen);
}

std::vector<Flag> enumerate_full_flags(const FieldPtr& field, std::size_t n) {
    const FlagType type = FlagType::full(n);
    std::vector<std::vector<Subspace>> levels;
    for (std::size_t j = 1; j < n; ++j) levels.push_back(enumerate_grassmannian(field, n, j));

    std::vector<Flag> out;
    std::vector<Subspace> chain;
    auto extend = [&](auto&& self, std::size_t level) -> void {
        if (level == levels.size()) {
            out.emplace_back(type, chain);
            return;
        }
        for (const Subspace& s : levels[level]) {
            if (level > 0 && !s.contains(chain.back())) continue;
            chain.push_back(s);
            self(self, level + 1);
            chain.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

const char* to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::Adhoc: return "adhoc";
        case Provenance::FullFromSpread: return "full-from-spread";
        case Provenance::Punctured: return "punctured";
        case Provenance::DivisorType: return "divisor-type";
    }
    return "adhoc";
}

std::optional<Provenance> provenance_from_string(const std::string& s) noexcept {
    for (Provenance p : {Provenance::Adhoc, Provenance::FullFromSpread, Provenance::Punctured, Provenance::DivisorType})
        if (s == to_string(p)) return p;
    return std::nullopt;
}

FlagCode::FlagCode(FlagType type, std::vector<Flag> flags, Provenance provenance, std::string provenance_detail)
    : FlagCode(std::move(type), std::move(flags), {}, provenance, std::move(provenance_detail)) {}

FlagCode::FlagCode(FlagType type, std::vector<Flag> flags, std::vector<Matrix> generators, Provenance provenance,
                   std::string provenance_detail)
    : type_(std::move(type)),
      flags_(std::move(flags)),
      generators_(std::move(generators)),
      provenance_(provenance),
      provenance_detail_(std::move(provenance_detail)) {
    if (flags_.size() < 2) throw Error(ErrorCode::CodeTooSmall, "a flag code needs at least two flags");
    for (std::size_t i = 0; i < flags_.size(); ++i) {
        if (!(flags_[i].type() == type_)) throw Error(ErrorCode::TypeMismatch, "flag type differs from code type");
        if (!flags_[i].field()->same_as(*flags_.front().field()))
            throw Error(ErrorCode::FieldMismatch, "flags over different fields");
        for (std::size_t j = 0; j < i; ++j)
            if (flags_[j] == flags_[i])
                throw Error(ErrorCode::DuplicateFlag, "flag " + std::to_string(i) + " duplicates flag " + std::to_string(j));
    }
    if (generators_.empty()) {
        generators_.reserve(flags_.size());
        for (const Flag& f : flags_) generators_.push_back(adapted_generator(f));
    }
}

FlagCode FlagCode::from_generators(FlagType type, std::vector<Matrix> generators, Provenance provenance,
                                   std::string provenance_detail) {
    std::vector<Flag> flags;
    std::vector<Matrix> kept;
    flags.reserve(generators.size());
    for (const Matrix& g : generators) {
        flags.push_back(Flag::from_generator(type, g));
        kept.push_back(row_prefix(g, type.dims().back()));
    }
    return FlagCode(std::move(type), std::move(flags), std::move(kept), provenance, std::move(provenance_detail));
}

const Flag& FlagCode::flag(std::size_t i) const {
    if (i >= flags_.size()) throw Error(ErrorCode::IndexOutOfRange, "flag index " + std::to_string(i));
    return flags_[i];
}

const Matrix& FlagCode::generator(std::size_t i) const {
    if (i >= generators_.size()) throw Error(ErrorCode::IndexOutOfRange, "flag index " + std::to_string(i));
    return generators_[i];
}

std::optional<std::size_t> FlagCode::find(const Flag& f) const {
    for (std::size_t i = 0; i < flags_.size(); ++i)
        if (flags_[i] == f) return i;
    return std::nullopt;
}

std::vector<Subspace> projected_code(const FlagCode& code, std::size_t i) {
    if (i < 1 || i > code.type().length())
        throw Error(ErrorCode::IndexOutOfRange, "projection index " + std::to_string(i));
    std::vector<Subspace> out;
    std::unordered_set<Subspace, SubspaceHash> seen;
    for (const Flag& f : code.flags())
        if (seen.insert(f[i - 1]).second) out.push_back(f[i - 1]);
    return out;
}

std::size_t subspace_code_distance(const std::vector<Subspace>& code) {
    if (code.size() < 2) return 0;
    std::size_t best = SIZE_MAX;
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = a + 1; b < code.size(); ++b) best = std::min(best, subspace_distance(code[a], code[b]));
    return best;
}

bool is_disjoint(const FlagCode& code) {
    if (code.size() < 2) throw Error(ErrorCode::CodeTooSmall, "disjointness needs at least two flags");
    for (std::size_t i = 1; i <= code.type().length(); ++i)
        if (projected_code(code, i).size() != code.size()) return false;
    return true;
}

std::size_t min_flag_distance(const FlagCode& code) {
    if (code.size() < 2) throw Error(ErrorCode::CodeTooSmall, "minimum distance needs at least two flags");
    std::size_t best = SIZE_MAX;
    const auto& fl = code.flags();
    for (std::size_t a = 0; a < fl.size(); ++a)
        for (std::size_t b = a + 1; b < fl.size(); ++b) best = std::min(best, flag_distance(fl[a], fl[b]));
    return best;
}

OptimumReport is_optimum_distance(const FlagCode& code) {
    OptimumReport r;
    r.size = code.size();
    r.min_distance = min_flag_distance(code);
    r.bound = max_flag_distance_bound(code.type());
    r.optimum = r.min_distance == r.bound;

    r.disjoint = true;
    bool projected_at_max = true;
    for (std::size_t i = 1; i <= code.type().length(); ++i) {
        const auto ci = projected_code(code, i);
        r.projected_sizes.push_back(ci.size());
        r.projected_distances.push_back(subspace_code_distance(ci));
        r.projected_max.push_back(max_subspace_distance(code.ambient(), code.type().dim(i - 1)));
        if (ci.size() != code.size()) r.disjoint = false;
        if (r.projected_distances.back() != r.projected_max.back()) projected_at_max = false;
    }
    r.characterization = r.disjoint && projected_at_max;
    return r;
}

}  // namespace flagcode
