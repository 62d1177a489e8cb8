#include "gib/matrix.hpp"

namespace gib {

std::pair<MatQ, MatQ> split_components(const MatK& m) {
    MatQ a0(m.rows(), m.cols()), a1(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            a0(i, j) = m(i, j).a;
            a1(i, j) = m(i, j).b;
        }
    return {a0, a1};
}

long field_of(const MatK& m) {
    long d = 0;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const QuadElem& x = m(i, j);
            if (x.d != 0) {
                if (d != 0 && d != x.d)
                    throw std::invalid_argument("matrix mixes quadratic fields");
                d = x.d;
            }
        }
    return d;
}

MatK lift_to_field(const MatQ& m) {
    return m.map([](const Rat& x) { return QuadElem(x); });
}

namespace {
template <class M, class F>
std::string mat_string(const M& m, F entry) {
    std::string s = "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        s += i ? "; " : "";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += entry(m(i, j));
        }
    }
    return s + "]";
}
}  // namespace

std::string to_string(const MatQ& m) {
    return mat_string(m, [](const Rat& x) { return rat_string(x); });
}
std::string to_string(const MatZ& m) {
    return mat_string(m, [](const Int& x) { return x.get_str(); });
}
std::string to_string(const MatK& m) {
    return mat_string(m, [](const QuadElem& x) { return to_string(x); });
}

}  // namespace gib
