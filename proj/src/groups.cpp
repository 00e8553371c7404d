#include "fundclass/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "fundclass/intlin.hpp"

namespace fundclass::groups {

AbelianPresentation::AbelianPresentation(std::vector<long> ord, std::vector<std::string> lab)
    : orders(std::move(ord)), labels(std::move(lab)) {
    for (long n : orders)
        if (n < 1) throw input_error("generator orders must be >= 1");
    if (labels.empty()) {
        for (size_t i = 0; i < orders.size(); ++i) labels.push_back("s" + std::to_string(i));
    }
    if (labels.size() != orders.size()) throw input_error("label count mismatch");
}

long AbelianPresentation::order() const {
    long n = 1;
    for (long o : orders) n *= o;
    return n;
}

GroupElement AbelianPresentation::identity() const {
    return GroupElement{std::vector<long>(orders.size(), 0)};
}

GroupElement AbelianPresentation::make(std::vector<long> exps) const {
    if (exps.size() != orders.size()) throw input_error("exponent vector length mismatch");
    for (size_t i = 0; i < exps.size(); ++i) {
        exps[i] %= orders[i];
        if (exps[i] < 0) exps[i] += orders[i];
    }
    return GroupElement{std::move(exps)};
}

GroupElement AbelianPresentation::generator(long i) const {
    std::vector<long> e(orders.size(), 0);
    if (i < 0 || i >= rank()) throw input_error("generator index out of range");
    e[i] = orders[i] > 1 ? 1 : 0;
    return GroupElement{std::move(e)};
}

GroupElement AbelianPresentation::compose(const GroupElement& g, const GroupElement& h) const {
    if (g.e.size() != orders.size() || h.e.size() != orders.size())
        throw input_error("element belongs to a different presentation");
    std::vector<long> e(orders.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = (g.e[i] + h.e[i]) % orders[i];
    return GroupElement{std::move(e)};
}

GroupElement AbelianPresentation::invert(const GroupElement& g) const {
    std::vector<long> e(orders.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = g.e[i] == 0 ? 0 : orders[i] - g.e[i];
    return GroupElement{std::move(e)};
}

GroupElement AbelianPresentation::power(const GroupElement& g, long k) const {
    std::vector<long> e(orders.size());
    for (size_t i = 0; i < e.size(); ++i) {
        long r = (g.e[i] * (k % orders[i])) % orders[i];
        e[i] = r < 0 ? r + orders[i] : r;
    }
    return GroupElement{std::move(e)};
}

long AbelianPresentation::element_order(const GroupElement& g) const {
    long ord = 1;
    for (size_t i = 0; i < orders.size(); ++i) {
        long o = orders[i] / std::gcd(orders[i], g.e[i] == 0 ? orders[i] : g.e[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

bool AbelianPresentation::is_identity(const GroupElement& g) const {
    return std::all_of(g.e.begin(), g.e.end(), [](long x) { return x == 0; });
}

long AbelianPresentation::rank_of(const GroupElement& g) const {
    long r = 0;
    for (size_t i = 0; i < orders.size(); ++i) r = r * orders[i] + g.e[i];
    return r;
}

GroupElement AbelianPresentation::element_at(long rank) const {
    std::vector<long> e(orders.size());
    for (long i = static_cast<long>(orders.size()) - 1; i >= 0; --i) {
        e[i] = rank % orders[i];
        rank /= orders[i];
    }
    return GroupElement{std::move(e)};
}

std::string AbelianPresentation::format(const GroupElement& g) const {
    std::ostringstream os;
    for (size_t i = 0; i < g.e.size(); ++i) {
        if (i) os << ',';
        os << g.e[i];
    }
    return os.str();
}

GroupElement AbelianPresentation::parse(const std::string& s) const {
    std::vector<long> e;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) e.push_back(std::stol(tok));
    return make(std::move(e));
}

std::string AbelianPresentation::format_orders() const {
    std::ostringstream os;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) os << 'x';
        os << orders[i];
    }
    return os.str();
}

std::vector<GroupElement> enumerate_group(const AbelianPresentation& G, long bound) {
    long n = G.order();
    if (n > bound) throw resource_error("group order exceeds enumeration bound");
    std::vector<GroupElement> out;
    out.reserve(n);
    for (long r = 0; r < n; ++r) out.push_back(G.element_at(r));
    return out;
}

SubgroupSpec cyclic_subgroup(const AbelianPresentation& G, const GroupElement& g) {
    (void)G;
    return SubgroupSpec{{g}};
}

std::vector<GroupElement> subgroup_elements(const AbelianPresentation& G, const SubgroupSpec& H) {
    std::set<GroupElement> seen;
    std::vector<GroupElement> frontier{G.identity()};
    seen.insert(G.identity());
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& g : frontier)
            for (const auto& h : H.generators) {
                GroupElement gh = G.compose(g, h);
                if (seen.insert(gh).second) next.push_back(gh);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

CosetData coset_data(const AbelianPresentation& G, const SubgroupSpec& H) {
    auto hs = subgroup_elements(G, H);
    auto all = enumerate_group(G);
    CosetData cd;
    std::map<GroupElement, long> canon; // lex-least coset member -> rep index
    for (const auto& g : all) {
        if (cd.rep_index.count(g)) continue;
        GroupElement least = g;
        std::vector<GroupElement> coset;
        coset.reserve(hs.size());
        for (const auto& h : hs) {
            GroupElement gh = G.compose(g, h);
            if (gh < least) least = gh;
            coset.push_back(gh);
        }
        long idx = static_cast<long>(cd.representatives.size());
        cd.representatives.push_back(least);
        for (const auto& x : coset) cd.rep_index[x] = idx;
    }
    (void)canon;
    return cd;
}

QuotientPresentation quotient_presentation(const AbelianPresentation& G, const SubgroupSpec& H) {
    using intlin::Int;
    using intlin::Mat;
    const long k = G.rank();
    const long s = static_cast<long>(H.generators.size());
    Mat M(k, k + s);
    for (long i = 0; i < k; ++i) M.at(i, i) = G.orders[i];
    for (long j = 0; j < s; ++j)
        for (long i = 0; i < k; ++i) M.at(i, k + j) = H.generators[j].e[i];
    auto snf = intlin::smith_normal_form(M);

    QuotientPresentation qp;
    std::vector<long> qorders(k);
    for (long i = 0; i < k; ++i) {
        if (i >= static_cast<long>(snf.diag.size()) || snf.diag[i] == 0)
            throw input_error("quotient of finite group must be finite");
        qorders[i] = static_cast<long>(snf.diag[i].get_si());
    }
    qp.Q = AbelianPresentation(qorders);
    qp.proj_matrix.assign(k, std::vector<long>(k));
    qp.lift_matrix.assign(k, std::vector<long>(k));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) {
            qp.proj_matrix[i][j] = static_cast<long>(snf.u.at(i, j).get_si());
            qp.lift_matrix[i][j] = static_cast<long>(snf.uinv.at(i, j).get_si());
        }
    qp.g_orders = G.orders;
    return qp;
}

GroupElement QuotientPresentation::proj(const GroupElement& g) const {
    const long k = Q.rank();
    std::vector<long> e(k, 0);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) e[i] += proj_matrix[i][j] * g.e[j];
    return Q.make(std::move(e));
}

GroupElement QuotientPresentation::lift(const GroupElement& q) const {
    const long k = Q.rank();
    std::vector<long> e(k, 0);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) e[i] += lift_matrix[i][j] * q.e[j];
    for (long i = 0; i < k; ++i) {
        e[i] %= g_orders[i];
        if (e[i] < 0) e[i] += g_orders[i];
    }
    return GroupElement{std::move(e)};
}

} // namespace fundclass::groups
