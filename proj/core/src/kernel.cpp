#include "feq/kernel.hpp"

#include <map>

namespace feq {

std::vector<EmbeddingTuple> kernel_search(const EquationSpec& spec, int p,
                                          const PrecisionPolicy& pp) {
    if (p < 1) throw PreconditionFailed("kernel search needs degree >= 1");
    if (!validate(spec).ok) throw PreconditionFailed("kernel search on an invalid equation");
    const NumberField::Ptr& field = spec.field;
    const int d = field->degree();
    const int identity = field->distinguished_index();

    // Condition expression per role subset S of the p slots; independent of
    // the tuple, so built once. Slot j in S takes alpha, otherwise beta.
    const unsigned long nsubsets = 1UL << p;
    std::vector<CondExpr> conditions;
    conditions.reserve(nsubsets);
    for (unsigned long s = 0; s < nsubsets; ++s) {
        CondExpr sum(field, p);
        const int l = __builtin_popcountl(s);
        for (int i = 0; i < spec.n; ++i) {
            CondExpr term = CondExpr::from_element(field, p, spec.a[static_cast<size_t>(i)], 0);
            for (int j = 0; j < p; ++j) {
                const bool take_alpha = (s >> j) & 1UL;
                const FieldElement& node =
                    take_alpha ? spec.alpha[static_cast<size_t>(i)] : spec.beta[static_cast<size_t>(i)];
                term = term * CondExpr::from_element(field, p, node, j + 1);
            }
            sum += term;
        }
        conditions.push_back(sum.scaled(binomial(p, l)));
    }

    std::vector<EmbeddingTuple> witnesses;
    std::vector<int> tuple(static_cast<size_t>(p), 0);
    for (;;) {
        // deduplicate role subsets equivalent under this tuple: the condition
        // depends only on how many alpha-roles each distinct root receives
        std::map<std::vector<int>, bool> seen;
        bool all_zero = true;
        for (unsigned long s = 0; s < nsubsets && all_zero; ++s) {
            std::vector<int> key(static_cast<size_t>(d), -1);
            for (int j = 0; j < p; ++j) {
                int& slot = key[static_cast<size_t>(tuple[static_cast<size_t>(j)])];
                if (slot < 0) slot = 0;
                if ((s >> j) & 1UL) ++slot;
            }
            auto [it, fresh] = seen.emplace(std::move(key), true);
            if (!fresh) continue;
            EmbeddingTuple et{tuple};
            if (!is_zero_at_tuple(conditions[s], identity, et, pp)) all_zero = false;
        }
        if (all_zero) witnesses.push_back(EmbeddingTuple{tuple});

        int pos = p - 1;
        while (pos >= 0 && tuple[static_cast<size_t>(pos)] == d - 1) {
            tuple[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<size_t>(pos)];
    }
    return witnesses;
}

} // namespace feq
