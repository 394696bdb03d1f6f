#include "leibniz/fixtures.hpp"

#include "leibniz/splitting.hpp"

namespace leibniz {

LeibnizAlgebra abelian_algebra(std::size_t dim, std::string name) {
    return LeibnizAlgebra(dim, std::move(name));
}

LeibnizAlgebra leib2() {
    LeibnizAlgebra alg(2, "leib2");
    alg.c[0][0][1] = Rational(1);
    return alg;
}

LeibnizAlgebra lie_r2() {
    LeibnizAlgebra alg(2, "lie_r2");
    alg.c[0][1][1] = Rational(1);
    alg.c[1][0][1] = Rational(-1);
    return alg;
}

LeibnizAlgebra heis3() {
    LeibnizAlgebra alg(3, "heis3");
    alg.c[0][1][2] = Rational(1);
    alg.c[1][0][2] = Rational(-1);
    return alg;
}

LeibnizAlgebra sl2() {
    LeibnizAlgebra alg(3, "sl2");
    alg.c[0][1][2] = Rational(1);   // ef = h
    alg.c[1][0][2] = Rational(-1);
    alg.c[2][0][0] = Rational(2);   // he = 2e
    alg.c[0][2][0] = Rational(-2);
    alg.c[2][1][1] = Rational(-2);  // hf = -2f
    alg.c[1][2][1] = Rational(2);
    return alg;
}

LeibnizAlgebra nullfil3() {
    LeibnizAlgebra alg(3, "nullfil3");
    alg.c[0][0][1] = Rational(1);
    alg.c[0][1][2] = Rational(1);
    return alg;
}

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b, std::string name) {
    LeibnizAlgebra r(a.dim + b.dim, std::move(name));
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) r.c[i][j][k] = a.c[i][j][k];
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k)
                r.c[a.dim + i][a.dim + j][a.dim + k] = b.c[i][j][k];
    return r;
}

std::vector<LeibnizAlgebra> builtin_corpus() {
    std::vector<LeibnizAlgebra> corpus;
    corpus.push_back(abelian_algebra(1, "abelian1"));
    corpus.push_back(abelian_algebra(2, "abelian2"));
    corpus.push_back(abelian_algebra(3, "abelian3"));
    corpus.push_back(leib2());
    corpus.push_back(lie_r2());
    corpus.push_back(heis3());
    corpus.push_back(sl2());
    corpus.push_back(nullfil3());
    corpus.push_back(direct_sum(leib2(), abelian_algebra(1), "leib2_plus_abelian1"));
    LeibnizAlgebra r2 = lie_r2();
    LeibnizAlgebra split = split_extension(r2, adjoint_module(r2)).algebra;
    split.name = "lie_r2_adjoint_split";
    corpus.push_back(std::move(split));
    return corpus;
}

}  // namespace leibniz
