#include "u3/generators.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace u3 {

namespace {

// Signed square-root amplitude sqrt(prod(num) / prod(den)) * sign with a
// zero short-circuit: if any numerator factor vanishes the amplitude is
// exactly zero and the denominator is never evaluated (it can itself be
// zero in that case).  For valid source patterns every numerator factor is
// non-negative and the denominator is positive whenever no numerator
// factor vanishes.
double amplitude(std::initializer_list<long> num, std::initializer_list<long> den,
                 int sign = 1) {
    double n = 1.0;
    for (long f : num) {
        if (f == 0) return 0.0;
        n *= static_cast<double>(f);
    }
    double d = 1.0;
    for (long f : den) d *= static_cast<double>(f);
    return sign * std::sqrt(n / d);
}

void add_term(LinearCombo& combo, GelfandPattern target, double value) {
    if (value == 0.0 || !valid(target)) return;
    combo[target] += value;
}

} // namespace

LinearCombo apply_generator(int i, int j, const GelfandPattern& p) {
    const long n13 = p.n13, n23 = p.n23, n33 = p.n33, n12 = p.n12, n22 = p.n22, n11 = p.n11;
    LinearCombo out;

    auto shifted = [&](int d12, int d22, int d11) {
        GelfandPattern t = p;
        t.n12 += d12;
        t.n22 += d22;
        t.n11 += d11;
        return t;
    };

    if (i == j) {
        const double w = i == 1 ? weight1(p) : i == 2 ? weight2(p) : weight3(p);
        if (w != 0.0) out[p] = w;
        return out;
    }
    if (i == 1 && j == 2) {
        add_term(out, shifted(0, 0, +1), amplitude({n12 - n11, n11 - n22 + 1}, {}));
        return out;
    }
    if (i == 2 && j == 1) {
        add_term(out, shifted(0, 0, -1), amplitude({n12 - n11 + 1, n11 - n22}, {}));
        return out;
    }
    if (i == 2 && j == 3) {
        add_term(out, shifted(+1, 0, 0),
                 amplitude({n13 - n12, n12 - n23 + 1, n12 - n33 + 2, n12 - n11 + 1},
                           {n12 - n22 + 2, n12 - n22 + 1}));
        add_term(out, shifted(0, +1, 0),
                 amplitude({n13 - n22 + 1, n23 - n22, n22 - n33 + 1, n11 - n22},
                           {n12 - n22 + 1, n12 - n22}));
        return out;
    }
    if (i == 3 && j == 2) {
        add_term(out, shifted(-1, 0, 0),
                 amplitude({n13 - n12 + 1, n12 - n23, n12 - n33 + 1, n12 - n11},
                           {n12 - n22 + 1, n12 - n22}));
        add_term(out, shifted(0, -1, 0),
                 amplitude({n13 - n22 + 2, n23 - n22 + 1, n22 - n33, n11 - n22 + 1},
                           {n12 - n22 + 2, n12 - n22 + 1}));
        return out;
    }
    if (i == 1 && j == 3) {
        add_term(out, shifted(+1, 0, +1),
                 amplitude({n13 - n12, n12 - n23 + 1, n12 - n33 + 2, n11 - n22 + 1},
                           {n12 - n22 + 2, n12 - n22 + 1}));
        add_term(out, shifted(0, +1, +1),
                 amplitude({n13 - n22 + 1, n23 - n22, n22 - n33 + 1, n12 - n11},
                           {n12 - n22 + 1, n12 - n22}, -1));
        return out;
    }
    if (i == 3 && j == 1) {
        add_term(out, shifted(-1, 0, -1),
                 amplitude({n13 - n12 + 1, n12 - n23, n12 - n33 + 1, n11 - n22},
                           {n12 - n22 + 1, n12 - n22}));
        add_term(out, shifted(0, -1, -1),
                 amplitude({n13 - n22 + 2, n23 - n22 + 1, n22 - n33, n12 - n11 + 1},
                           {n12 - n22 + 2, n12 - n22 + 1}, -1));
        return out;
    }
    throw std::invalid_argument("generator indices must be in 1..3");
}

Eigen::MatrixXd generator_matrix(int i, int j, const IrrepBasis& basis) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(basis.size(), basis.size());
    for (int s = 0; s < basis.size(); ++s)
        for (const auto& [target, value] : apply_generator(i, j, basis.state(s)))
            m(basis.index(target), s) = value;
    return m;
}

} // namespace u3
