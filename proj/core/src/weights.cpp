#include "sunbranch/weights.hpp"

#include <numeric>
#include <sstream>

#include "sunbranch/checked_int.hpp"

namespace sunbranch {

YoungWeight::YoungWeight(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw InvalidArgumentError("YoungWeight: rank must be at least 1");
    }
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        if (parts_[i] < parts_[i + 1]) {
            throw InvalidArgumentError("YoungWeight: parts must be weakly decreasing");
        }
    }
    if (parts_.back() < 0) {
        throw InvalidArgumentError("YoungWeight: parts must be nonnegative");
    }
}

std::int64_t YoungWeight::sum() const {
    Int128 s = 0;
    for (auto p : parts_) s = checked_add(s, p);
    return checked_narrow(s);
}

DynkinLabel::DynkinLabel(std::vector<std::int64_t> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw InvalidArgumentError("DynkinLabel: needs at least one label");
    }
    for (auto l : labels_) {
        if (l < 0) throw InvalidArgumentError("DynkinLabel: labels must be nonnegative");
    }
}

RealSpectrum::RealSpectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw InvalidArgumentError("RealSpectrum: rank must be at least 1");
    }
    for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
        if (!(values_[i] >= values_[i + 1])) {
            throw InvalidArgumentError("RealSpectrum: values must be weakly decreasing");
        }
    }
}

DynkinLabel young_to_dynkin(const YoungWeight& w) {
    if (w.rank() < 2) {
        throw InvalidArgumentError("young_to_dynkin: rank must be at least 2");
    }
    std::vector<std::int64_t> labels(static_cast<std::size_t>(w.rank() - 1));
    for (int i = 0; i + 1 < w.rank(); ++i) {
        labels[static_cast<std::size_t>(i)] = w.part(i) - w.part(i + 1);
    }
    return DynkinLabel(std::move(labels));
}

YoungWeight dynkin_to_young(const DynkinLabel& d) {
    std::vector<std::int64_t> parts(static_cast<std::size_t>(d.size() + 1), 0);
    for (int i = d.size() - 1; i >= 0; --i) {
        parts[static_cast<std::size_t>(i)] =
            checked_narrow(checked_add(parts[static_cast<std::size_t>(i + 1)], d.label(i)));
    }
    return YoungWeight(std::move(parts));
}

YoungWeight weyl_vector(int n) {
    if (n < 1) throw InvalidArgumentError("weyl_vector: n must be positive");
    std::vector<std::int64_t> parts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)] = n - 1 - i;
    return YoungWeight(std::move(parts));
}

YoungWeight su_normalize(const YoungWeight& w) {
    std::vector<std::int64_t> parts = w.parts();
    const std::int64_t last = parts.back();
    for (auto& p : parts) p -= last;
    return YoungWeight(std::move(parts));
}

RealSpectrum spacings(const RealSpectrum& b) {
    std::vector<double> v = b.values();
    const double last = v.back();
    for (auto& x : v) x -= last;
    return RealSpectrum(std::move(v));
}

double vandermonde(const RealSpectrum& x) { return vandermonde(std::span<const double>(x.values())); }

double vandermonde(std::span<const double> x) {
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            p *= x[i] - x[j];
        }
    }
    return p;
}

std::int64_t weyl_dimension(const YoungWeight& alpha) {
    // Numerator: integer Vandermonde of alpha + rho; denominator: Vandermonde
    // of rho. The quotient is an exact integer; divide factor by factor to
    // keep intermediates small: dim = prod_{i<j} (a_i - a_j + j - i)/(j - i).
    const int n = alpha.rank();
    Int128 num = 1;
    Int128 den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num = checked_mul(num, Int128(alpha.part(i) - alpha.part(j)) + (j - i));
            den = checked_mul(den, Int128(j - i));
            if (num % den == 0) {
                num /= den;
                den = 1;
            }
        }
    }
    if (den != 1) {
        if (num % den != 0) {
            throw InternalConsistencyError("weyl_dimension: non-integer quotient");
        }
        num /= den;
    }
    return checked_narrow(num);
}

YoungWeight add(const YoungWeight& a, const YoungWeight& b) {
    if (a.rank() != b.rank()) {
        throw InvalidArgumentError("add: rank mismatch");
    }
    std::vector<std::int64_t> parts(static_cast<std::size_t>(a.rank()));
    for (int i = 0; i < a.rank(); ++i) {
        parts[static_cast<std::size_t>(i)] =
            checked_narrow(checked_add(a.part(i), b.part(i)));
    }
    return YoungWeight(std::move(parts));
}

YoungWeight scale(const YoungWeight& w, std::int64_t s) {
    if (s < 0) throw InvalidArgumentError("scale: factor must be nonnegative");
    std::vector<std::int64_t> parts(static_cast<std::size_t>(w.rank()));
    for (int i = 0; i < w.rank(); ++i) {
        parts[static_cast<std::size_t>(i)] = checked_narrow(checked_mul(w.part(i), s));
    }
    return YoungWeight(std::move(parts));
}

RealSpectrum to_spectrum(const YoungWeight& w) {
    return RealSpectrum(std::vector<double>(w.parts().begin(), w.parts().end()));
}

namespace {

template <typename Seq>
std::string join_braced(const Seq& seq, char open, char close) {
    std::ostringstream os;
    os << open;
    bool first = true;
    for (const auto& v : seq) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << close;
    return os.str();
}

} // namespace

std::string to_string(const YoungWeight& w) { return join_braced(w.parts(), '{', '}'); }
std::string to_string(const DynkinLabel& d) { return join_braced(d.labels(), '(', ')'); }
std::string to_string(const RealSpectrum& s) { return join_braced(s.values(), '(', ')'); }

} // namespace sunbranch
