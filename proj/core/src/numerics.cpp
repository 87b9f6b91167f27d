#include "xfermi/numerics.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace xfermi::numerics {

namespace {

// 15-point Kronrod rule with embedded 7-point Gauss rule.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

enum class Mapping { Finite, UpperTail, LowerTail };

struct Piece {
    Mapping mapping;
    double anchor; // c in x = c ± t/(1-t); unused for Finite
};

struct Segment {
    int piece;
    double a;
    double b;
    double value;
    double error;
    double abs_value;
    bool splittable;
};

struct SegmentOrder {
    bool operator()(const Segment& l, const Segment& r) const { return l.error < r.error; }
};

class Evaluator {
public:
    Evaluator(const ScalarFunction& f, std::vector<Piece> pieces)
        : f_(f), pieces_(std::move(pieces)) {}

    double operator()(int piece, double t) {
        ++evaluations_;
        const Piece& p = pieces_[piece];
        double x = t;
        double jac = 1.0;
        if (p.mapping != Mapping::Finite) {
            const double u = 1.0 - t;
            const double s = t / u;
            jac = 1.0 / (u * u);
            x = p.mapping == Mapping::UpperTail ? p.anchor + s : p.anchor - s;
        }
        const double fx = f_(x);
        if (!std::isfinite(fx)) {
            std::ostringstream msg;
            msg << "integrate: integrand returned non-finite value " << fx << " at x = " << x;
            throw DomainError(msg.str());
        }
        return fx == 0.0 ? 0.0 : fx * jac;
    }

    Segment gauss_kronrod(int piece, double a, double b) {
        const double centre = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        const double fc = (*this)(piece, centre);
        double kronrod = fc * kKronrodWeights[7];
        double gauss = fc * kGaussWeights[3];
        double abs_k = std::abs(kronrod);
        std::array<double, 7> f1{};
        std::array<double, 7> f2{};
        for (int j = 0; j < 7; ++j) {
            const double dx = half * kKronrodNodes[j];
            f1[j] = (*this)(piece, centre - dx);
            f2[j] = (*this)(piece, centre + dx);
            kronrod += kKronrodWeights[j] * (f1[j] + f2[j]);
            abs_k += kKronrodWeights[j] * (std::abs(f1[j]) + std::abs(f2[j]));
            if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1[j] + f2[j]);
        }
        const double mean = 0.5 * kronrod;
        double asc = kKronrodWeights[7] * std::abs(fc - mean);
        for (int j = 0; j < 7; ++j)
            asc += kKronrodWeights[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

        const double value = kronrod * half;
        const double abs_value = abs_k * std::abs(half);
        const double resasc = asc * std::abs(half);
        double err = std::abs((kronrod - gauss) * half);
        if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
        constexpr double eps = std::numeric_limits<double>::epsilon();
        if (abs_value > std::numeric_limits<double>::min() / (50.0 * eps))
            err = std::max(50.0 * eps * abs_value, err);

        const double width_floor = 100.0 * eps * std::max({std::abs(a), std::abs(b), 1e-300});
        return Segment{piece, a, b, value, err, abs_value, (b - a) > width_floor};
    }

    int evaluations() const noexcept { return evaluations_; }

private:
    const ScalarFunction& f_;
    std::vector<Piece> pieces_;
    int evaluations_ = 0;
};

double kahan_total(const std::vector<Segment>& segs, double Segment::*field) {
    double sum = 0.0;
    double comp = 0.0;
    for (const auto& s : segs) {
        const double v = s.*field;
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) comp += (sum - t) + v;
        else comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

} // namespace

void QuadratureSpec::validate() const {
    if (!(relative_tolerance > 0.0) || !(absolute_tolerance > 0.0))
        throw DomainError("QuadratureSpec: tolerances must be positive");
    if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
}

QuadratureResult integrate(const ScalarFunction& f, double lo, double hi,
                           const QuadratureSpec& spec, std::span<const double> breakpoints) {
    spec.validate();
    if (std::isnan(lo) || std::isnan(hi)) throw DomainError("integrate: NaN integration limit");
    if (lo == hi) return {};
    if (lo > hi) {
        auto r = integrate(f, hi, lo, spec, breakpoints);
        r.value = -r.value;
        return r;
    }

    std::vector<double> cuts;
    for (double b : breakpoints)
        if (std::isfinite(b) && b > lo && b < hi) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const bool lower_inf = std::isinf(lo);
    const bool upper_inf = std::isinf(hi);
    if (lower_inf && upper_inf && cuts.empty()) cuts.push_back(0.0);

    // Knots are the finite ends plus the cuts; infinite ends become tail pieces.
    std::vector<double> knots;
    if (!lower_inf) knots.push_back(lo);
    knots.insert(knots.end(), cuts.begin(), cuts.end());
    if (!upper_inf) knots.push_back(hi);

    std::vector<Piece> pieces;
    std::vector<std::pair<double, double>> ranges;
    if (lower_inf) {
        pieces.push_back({Mapping::LowerTail, knots.front()});
        ranges.emplace_back(0.0, 1.0);
    }
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        pieces.push_back({Mapping::Finite, 0.0});
        ranges.emplace_back(knots[i], knots[i + 1]);
    }
    if (upper_inf) {
        pieces.push_back({Mapping::UpperTail, knots.back()});
        ranges.emplace_back(0.0, 1.0);
    }

    Evaluator eval(f, pieces);
    std::priority_queue<Segment, std::vector<Segment>, SegmentOrder> open;
    std::vector<Segment> closed;
    for (std::size_t i = 0; i < ranges.size(); ++i)
        open.push(eval.gauss_kronrod(static_cast<int>(i), ranges[i].first, ranges[i].second));

    int subdivisions = static_cast<int>(ranges.size());
    double run_value = 0.0;
    double run_error = 0.0;
    double run_abs = 0.0;
    {
        auto copy = open;
        while (!copy.empty()) {
            run_value += copy.top().value;
            run_error += copy.top().error;
            run_abs += copy.top().abs_value;
            copy.pop();
        }
    }
    auto exact_totals = [&]() {
        std::vector<Segment> all = closed;
        auto copy = open;
        while (!copy.empty()) {
            all.push_back(copy.top());
            copy.pop();
        }
        std::sort(all.begin(), all.end(), [](const Segment& l, const Segment& r) {
            return l.piece != r.piece ? l.piece < r.piece : l.a < r.a;
        });
        run_value = kahan_total(all, &Segment::value);
        run_error = kahan_total(all, &Segment::error);
        run_abs = kahan_total(all, &Segment::abs_value);
    };

    constexpr double eps = std::numeric_limits<double>::epsilon();
    auto target = [&]() {
        return std::max({spec.absolute_tolerance, spec.relative_tolerance * std::abs(run_value),
                         100.0 * eps * run_abs});
    };
    while (true) {
        if (run_error <= target()) {
            exact_totals();
            if (run_error <= target())
                return {run_value, run_error, subdivisions, eval.evaluations()};
        }
        if (open.empty() || subdivisions >= spec.max_subdivisions) {
            exact_totals();
            std::ostringstream msg;
            msg << "integrate: no convergence to relative tolerance " << spec.relative_tolerance
                << " (absolute " << spec.absolute_tolerance << ") within " << spec.max_subdivisions
                << " subdivisions; estimate " << run_value << " +/- " << run_error;
            throw QuadratureError(msg.str(), run_value, run_error);
        }

        const Segment worst = open.top();
        open.pop();
        if (!worst.splittable) {
            closed.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = eval.gauss_kronrod(worst.piece, worst.a, mid);
        const Segment right = eval.gauss_kronrod(worst.piece, mid, worst.b);
        run_value += left.value + right.value - worst.value;
        run_error += left.error + right.error - worst.error;
        run_abs += left.abs_value + right.abs_value - worst.abs_value;
        open.push(left);
        open.push(right);
        ++subdivisions;
    }
}

QuadratureResult integrate_semi_infinite(const ScalarFunction& f, const QuadratureSpec& spec,
                                         std::span<const double> breakpoints) {
    return integrate(f, 0.0, std::numeric_limits<double>::infinity(), spec, breakpoints);
}

QuadratureResult integrate_whole_line(const ScalarFunction& f, const QuadratureSpec& spec,
                                      std::span<const double> breakpoints) {
    std::vector<double> cuts(breakpoints.begin(), breakpoints.end());
    cuts.push_back(0.0);
    const double inf = std::numeric_limits<double>::infinity();
    return integrate(f, -inf, inf, spec, cuts);
}

void BracketedRootSpec::validate() const {
    if (!(lo < hi)) throw DomainError("find_root: bracket requires lo < hi");
    if (!(tolerance > 0.0)) throw DomainError("find_root: tolerance must be positive");
    if (max_iterations < 1) throw DomainError("find_root: max_iterations must be >= 1");
}

double find_root(const ScalarFunction& f, const BracketedRootSpec& spec) {
    spec.validate();
    double a = spec.lo;
    double b = spec.hi;
    double fa = f(a);
    double fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fb))
        throw DomainError("find_root: function is non-finite at a bracket end");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        std::ostringstream msg;
        msg << "find_root: no sign change on [" << a << ", " << b << "] (f = " << fa << ", "
            << fb << ")";
        throw BracketError(msg.str(), fa, fb);
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (int iter = 0; iter < spec.max_iterations; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * eps * std::abs(b) + 0.5 * spec.tolerance;
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return b;

        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
        if (!std::isfinite(fb)) throw DomainError("find_root: function became non-finite");
    }
    std::ostringstream msg;
    msg << "find_root: no convergence to tolerance " << spec.tolerance << " in "
        << spec.max_iterations << " iterations";
    throw ConvergenceError(msg.str(), std::min(b, c), std::max(b, c));
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

std::vector<double> polyfit(std::span<const double> x, std::span<const double> y, int degree) {
    if (x.size() != y.size()) throw DomainError("polyfit: x and y differ in length");
    if (degree < 0 || x.size() < static_cast<std::size_t>(degree) + 1)
        throw DomainError("polyfit: not enough points for the requested degree");
    const std::size_t n = x.size();
    const std::size_t m = static_cast<std::size_t>(degree) + 1;

    double lo = *std::min_element(x.begin(), x.end());
    double hi = *std::max_element(x.begin(), x.end());
    const double shift = 0.5 * (lo + hi);
    const double scale = hi > lo ? 0.5 * (hi - lo) : 1.0;

    // Normal equations in the scaled variable u = (x - shift)/scale.
    std::vector<double> ata(m * m, 0.0);
    std::vector<double> aty(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (x[i] - shift) / scale;
        std::vector<double> pw(m, 1.0);
        for (std::size_t k = 1; k < m; ++k) pw[k] = pw[k - 1] * u;
        for (std::size_t r = 0; r < m; ++r) {
            aty[r] += pw[r] * y[i];
            for (std::size_t c = 0; c < m; ++c) ata[r * m + c] += pw[r] * pw[c];
        }
    }
    // Gaussian elimination with partial pivoting.
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::abs(ata[r * m + col]) > std::abs(ata[piv * m + col])) piv = r;
        if (ata[piv * m + col] == 0.0) throw DomainError("polyfit: singular system");
        if (piv != col) {
            for (std::size_t c = 0; c < m; ++c) std::swap(ata[col * m + c], ata[piv * m + c]);
            std::swap(aty[col], aty[piv]);
        }
        for (std::size_t r = col + 1; r < m; ++r) {
            const double factor = ata[r * m + col] / ata[col * m + col];
            for (std::size_t c = col; c < m; ++c) ata[r * m + c] -= factor * ata[col * m + c];
            aty[r] -= factor * aty[col];
        }
    }
    std::vector<double> coef_u(m);
    for (std::size_t i = m; i-- > 0;) {
        double s = aty[i];
        for (std::size_t c = i + 1; c < m; ++c) s -= ata[i * m + c] * coef_u[c];
        coef_u[i] = s / ata[i * m + i];
    }

    // Expand Σ c_k ((x - shift)/scale)^k back into powers of x.
    std::vector<double> coef(m, 0.0);
    std::vector<double> basis(m, 0.0); // coefficients of ((x - shift)/scale)^k
    basis[0] = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
        if (k > 0) {
            std::vector<double> next(m, 0.0);
            for (std::size_t j = 0; j < m; ++j) {
                if (basis[j] == 0.0) continue;
                if (j + 1 < m) next[j + 1] += basis[j] / scale;
                next[j] -= basis[j] * shift / scale;
            }
            basis = std::move(next);
        }
        for (std::size_t j = 0; j < m; ++j) coef[j] += coef_u[k] * basis[j];
    }
    return coef;
}

double r_squared(std::span<const double> x, std::span<const double> y,
                 std::span<const double> coefficients) {
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double fit = 0.0;
        for (std::size_t k = coefficients.size(); k-- > 0;) fit = fit * x[i] + coefficients[k];
        ss_res += (y[i] - fit) * (y[i] - fit);
        ss_tot += (y[i] - mean) * (y[i] - mean);
    }
    return ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
}

double neville(std::span<const double> x, std::span<const double> y, double target) {
    if (x.size() != y.size() || x.empty()) throw DomainError("neville: bad input sizes");
    std::vector<double> p(y.begin(), y.end());
    const std::size_t n = x.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i + k < n; ++i)
            p[i] = ((target - x[i + k]) * p[i] + (x[i] - target) * p[i + 1]) / (x[i] - x[i + k]);
    return p[0];
}

} // namespace xfermi::numerics
