#include <shv/qchar/qseries.hpp>

#include <sstream>
#include <stdexcept>

namespace shv::qchar {

QSeries::QSeries(Polynomial offset, std::vector<std::int64_t> coefficients)
    : offset_(std::move(offset)), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("q-series needs at least one coefficient");
}

std::int64_t QSeries::coefficient(int twice) const {
    if (twice < 0) return 0;
    if (twice >= static_cast<int>(coeffs_.size()))
        throw std::out_of_range("q-series coefficient beyond truncation");
    return coeffs_[static_cast<std::size_t>(twice)];
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    os << "q^{" << offset_.to_string() << "} * (";
    bool first = true;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[t];
        if (t == 1) os << "*q^{1/2}";
        else if (t > 0 && t % 2 == 0) os << "*q^" << t / 2;
        else if (t > 0) os << "*q^{" << t << "/2}";
    }
    if (first) os << "0";
    os << " + ...)";
    return os.str();
}

namespace {

using Series = std::vector<std::int64_t>;

// multiply in place by (1 + s q^{k/2})^{e} for e = +-1 style factors
void times_binomial(Series& a, int shift, std::int64_t s) {
    for (int i = static_cast<int>(a.size()) - 1; i >= shift; --i) a[i] += s * a[i - shift];
}

void divide_one_minus(Series& a, int shift) {
    for (std::size_t i = static_cast<std::size_t>(shift); i < a.size(); ++i) a[i] += a[i - shift];
}

}  // namespace

QSeries char_verma(int twice_truncation) {
    if (twice_truncation < 0) throw std::invalid_argument("negative truncation");
    Series a(static_cast<std::size_t>(twice_truncation) + 1, 0);
    a[0] = 1;
    for (int k = 1; 2 * k - 1 <= twice_truncation; ++k) {
        times_binomial(a, 2 * k - 1, 1);
        times_binomial(a, 2 * k - 1, 1);
    }
    for (int k = 1; 2 * k <= twice_truncation; ++k) {
        divide_one_minus(a, 2 * k);
        divide_one_minus(a, 2 * k);
    }
    return QSeries(Polynomial(0), std::move(a));
}

QSeries char_simple(const Rational& p, int twice_truncation) {
    Polynomial cL = Polynomial::variable(Parameter::cL), r = Polynomial::variable(Parameter::r);
    Polynomial h = (Polynomial(Rational(1) - p * p) * Rational(1, 24)) * (cL - Polynomial(3)) - r * Polynomial(p);
    Series a = char_verma(twice_truncation).coefficients();
    if (p.is_integer() && !p.is_zero()) {
        long ap = p.to_long() < 0 ? -p.to_long() : p.to_long();
        int shift = (ap % 2 == 1) ? static_cast<int>(ap) : static_cast<int>(2 * ap);
        times_binomial(a, shift, -1);
    }
    return QSeries(h, std::move(a));
}

std::string DimComparison::to_string() const {
    if (match) return "all graded dimensions agree";
    std::ostringstream os;
    os << "mismatch at degree " << (first_mismatch_twice % 2 ? std::to_string(first_mismatch_twice) + "/2"
                                                             : std::to_string(first_mismatch_twice / 2))
       << ": expected " << expected << ", got " << actual;
    return os.str();
}

DimComparison compare_dims(const QSeries& series, const std::vector<std::int64_t>& dims) {
    DimComparison c;
    if (dims.size() > series.coefficients().size())
        throw std::invalid_argument("more dimensions supplied than the series truncation covers");
    for (std::size_t t = 0; t < dims.size(); ++t)
        if (series.coefficient(static_cast<int>(t)) != dims[t]) {
            c.match = false;
            c.first_mismatch_twice = static_cast<int>(t);
            c.expected = series.coefficient(static_cast<int>(t));
            c.actual = dims[t];
            break;
        }
    return c;
}

}  // namespace shv::qchar
