#include "pursuit/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace pursuit {

namespace {

std::vector<std::vector<int>> all_permutations(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

Group::Group(int n, std::vector<Elem> table, std::string name, std::vector<std::string> element_names)
    : n_(n), table_(std::move(table)), name_(std::move(name)), element_names_(std::move(element_names)) {
    if (n_ <= 0) throw ValidationError("group order must be positive");
    if (table_.size() != static_cast<std::size_t>(n_) * n_)
        throw ValidationError("composition table has wrong size");
    for (Elem x : table_)
        if (x < 0 || x >= n_) throw ValidationError("composition table entry out of range");

    // locate the two-sided identity
    int id = -1;
    for (Elem e = 0; e < n_; ++e) {
        bool ok = true;
        for (Elem g = 0; g < n_ && ok; ++g)
            ok = compose(e, g) == g && compose(g, e) == g;
        if (ok) { id = e; break; }
    }
    if (id < 0) throw ValidationError("no two-sided identity in table");
    identity_ = id;

    inverse_.assign(n_, -1);
    for (Elem g = 0; g < n_; ++g) {
        for (Elem h = 0; h < n_; ++h) {
            if (compose(g, h) == identity_ && compose(h, g) == identity_) {
                inverse_[g] = h;
                break;
            }
        }
        if (inverse_[g] < 0) throw ValidationError("element " + std::to_string(g) + " has no two-sided inverse");
    }

    if (element_names_.empty()) {
        element_names_.reserve(n_);
        for (Elem g = 0; g < n_; ++g) element_names_.push_back(std::to_string(g));
    }
    cyclic_cache_.assign(n_, {});
    validate();
}

void Group::validate() const {
    // Latin square: each row and column is a permutation.
    std::vector<char> seen(n_);
    for (Elem a = 0; a < n_; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem b = 0; b < n_; ++b) seen[compose(a, b)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw ValidationError("row " + std::to_string(a) + " is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem b = 0; b < n_; ++b) seen[compose(b, a)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw ValidationError("column " + std::to_string(a) + " is not a permutation");
    }
    // Associativity: full triple scan up to order 64, sampled beyond.
    auto check = [&](Elem a, Elem b, Elem c) {
        if (compose(compose(a, b), c) != compose(a, compose(b, c)))
            throw ValidationError("non-associative triple (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (n_ <= 64) {
        for (Elem a = 0; a < n_; ++a)
            for (Elem b = 0; b < n_; ++b)
                for (Elem c = 0; c < n_; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<Elem> d(0, n_ - 1);
        for (int i = 0; i < 100000; ++i) check(d(rng), d(rng), d(rng));
    }
}

Group Group::cyclic(int n) {
    if (n < 1) throw ValidationError("cyclic(n) needs n >= 1");
    std::vector<Elem> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return Group(n, std::move(t), "cyclic(" + std::to_string(n) + ")", {});
}

Group Group::dihedral(int n) {
    if (n < 1) throw ValidationError("dihedral(n) needs n >= 1");
    int m = 2 * n;
    auto idx = [n](int rot, int flip) { return flip * n + rot; };
    std::vector<Elem> t(static_cast<std::size_t>(m) * m);
    std::vector<std::string> names;
    for (int f = 0; f < 2; ++f)
        for (int a = 0; a < n; ++a) names.push_back((f ? "r" + std::to_string(a) + "f" : "r" + std::to_string(a)));
    for (int f1 = 0; f1 < 2; ++f1)
        for (int a1 = 0; a1 < n; ++a1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int a2 = 0; a2 < n; ++a2) {
                    // (r^a1 f^f1)(r^a2 f^f2) = r^(a1 + (-1)^f1 a2) f^(f1+f2)
                    int rot = ((a1 + (f1 ? n - a2 : a2)) % n + n) % n;
                    t[static_cast<std::size_t>(idx(a1, f1)) * m + idx(a2, f2)] = idx(rot, f1 ^ f2);
                }
    return Group(m, std::move(t), "dihedral(" + std::to_string(n) + ")", std::move(names));
}

Group Group::symmetric(int k) {
    if (k < 1 || k > 7) throw SizeError("symmetric(k) supported for 1 <= k <= 7");
    auto perms = all_permutations(k);
    int m = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < m; ++i) index[perms[i]] = i;
    std::vector<Elem> t(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<int> c(k);
            for (int x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];  // apply b first, then a
            t[static_cast<std::size_t>(a) * m + b] = index[c];
        }
    std::vector<std::string> names;
    for (auto& p : perms) names.push_back(to_cycle_notation(p));
    return Group(m, std::move(t), "symmetric(" + std::to_string(k) + ")", std::move(names));
}

Group Group::quaternion8() {
    // 0:1 1:i 2:j 3:k 4:-1 5:-i 6:-j 7:-k
    auto mul = [](int a, int b) {
        int sa = a / 4, sb = b / 4, ua = a % 4, ub = b % 4;
        // units {1,i,j,k}: i*j=k, j*k=i, k*i=j, i*i=j*j=k*k=-1
        static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        int u = unit[ua][ub];
        int s = (sa + sb + sign[ua][ub]) % 2;
        return s * 4 + u;
    };
    std::vector<Elem> t(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a * 8 + b] = mul(a, b);
    std::vector<std::string> names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    return Group(8, std::move(t), "quaternion8", std::move(names));
}

Group Group::product(const Group& a, const Group& b) {
    int n = a.order() * b.order();
    std::vector<Elem> t(static_cast<std::size_t>(n) * n);
    auto idx = [&](int ia, int ib) { return ia * b.order() + ib; };
    for (int ia = 0; ia < a.order(); ++ia)
        for (int ib = 0; ib < b.order(); ++ib)
            for (int ja = 0; ja < a.order(); ++ja)
                for (int jb = 0; jb < b.order(); ++jb)
                    t[static_cast<std::size_t>(idx(ia, ib)) * n + idx(ja, jb)] =
                        idx(a.compose(ia, ja), b.compose(ib, jb));
    std::vector<std::string> names;
    for (int ia = 0; ia < a.order(); ++ia)
        for (int ib = 0; ib < b.order(); ++ib)
            names.push_back("(" + a.element_name(ia) + "," + b.element_name(ib) + ")");
    return Group(n, std::move(t), "product(" + a.name() + "," + b.name() + ")", std::move(names));
}

Group Group::from_table(std::vector<std::vector<Elem>> table, std::string name) {
    int n = static_cast<int>(table.size());
    std::vector<Elem> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw ValidationError("ragged composition table");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return Group(n, std::move(flat), std::move(name), {});
}

Group Group::from_permutations(const std::vector<std::vector<int>>& generators, int max_order) {
    if (generators.empty()) throw ValidationError("need at least one permutation generator");
    std::size_t deg = generators[0].size();
    for (auto& g : generators) {
        if (g.size() != deg) throw ValidationError("permutation generators have mixed degrees");
        std::vector<char> seen(deg, 0);
        for (int x : g) {
            if (x < 0 || x >= static_cast<int>(deg) || seen[x]) throw ValidationError("not a permutation");
            seen[x] = 1;
        }
    }
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    std::deque<int> queue;
    index[id] = 0;
    elems.push_back(id);
    queue.push_back(0);
    auto compose_perm = [&](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(deg);
        for (std::size_t x = 0; x < deg; ++x) r[x] = p[q[x]];
        return r;
    };
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (auto& g : generators) {
            auto nxt = compose_perm(elems[cur], g);
            if (!index.count(nxt)) {
                if (static_cast<int>(elems.size()) >= max_order)
                    throw SizeError("permutation closure exceeds configured cap of " + std::to_string(max_order));
                index[nxt] = static_cast<int>(elems.size());
                elems.push_back(nxt);
                queue.push_back(index[nxt]);
            }
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<Elem> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = index[compose_perm(elems[a], elems[b])];
    std::vector<std::string> names;
    for (auto& p : elems) names.push_back(to_cycle_notation(p));
    return Group(n, std::move(t), "perms[deg=" + std::to_string(deg) + ",order=" + std::to_string(n) + "]",
                 std::move(names));
}

Elem Group::power(Elem g, long long e) const {
    Elem base = g;
    if (e < 0) {
        base = inverse(g);
        e = -e;
    }
    Elem acc = identity_;
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

const std::vector<Elem>& Group::cyclic_subgroup(Elem g) const {
    auto& cached = cyclic_cache_[g];
    if (cached.empty()) {
        Elem x = identity_;
        do {
            cached.push_back(x);
            x = compose(x, g);
        } while (x != identity_);
    }
    return cached;
}

int Group::element_order(Elem g) const { return static_cast<int>(cyclic_subgroup(g).size()); }

std::optional<int> Group::power_index(Elem g, Elem x) const {
    const auto& powers = cyclic_subgroup(g);
    for (std::size_t i = 0; i < powers.size(); ++i)
        if (powers[i] == x) return static_cast<int>(i);
    return std::nullopt;
}

std::vector<Elem> Group::conjugacy_class(Elem g) const {
    std::set<Elem> cls;
    for (Elem u = 0; u < n_; ++u) cls.insert(conjugate(g, u));
    return {cls.begin(), cls.end()};
}

bool Group::is_abelian() const {
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = a + 1; b < n_; ++b)
            if (compose(a, b) != compose(b, a)) return false;
    return true;
}

std::string Group::to_table_file() const {
    std::ostringstream os;
    os << n_ << "\n";
    for (Elem a = 0; a < n_; ++a) {
        for (Elem b = 0; b < n_; ++b) {
            if (b) os << ' ';
            os << compose(a, b);
        }
        os << "\n";
    }
    return os.str();
}

Group Group::from_table_file(const std::string& text, std::string name) {
    std::istringstream is(text);
    int n = 0;
    if (!(is >> n) || n <= 0) throw ParseError("table file: expected positive order on first line");
    std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!(is >> rows[a][b]))
                throw ParseError("table file: row " + std::to_string(a) + " is short");
    return from_table(std::move(rows), std::move(name));
}

GenSet::GenSet(GroupPtr g, std::vector<Elem> elems) : group(std::move(g)), members(std::move(elems)) {
    if (!group) throw ValidationError("GenSet needs a group");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw ValidationError("GenSet must be nonempty");
    for (Elem m : members)
        if (m < 0 || m >= group->order()) throw ValidationError("GenSet member out of range");
}

bool GenSet::contains(Elem g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

bool is_symmetric(const GenSet& s) {
    for (Elem m : s.members)
        if (!s.contains(s.group->inverse(m))) return false;
    return true;
}

bool is_conjugation_closed(const GenSet& s) {
    const Group& g = *s.group;
    for (Elem u = 0; u < g.order(); ++u)
        for (Elem m : s.members)
            if (!s.contains(g.conjugate(m, u))) return false;
    return true;
}

bool generates(const GenSet& s) {
    const Group& g = *s.group;
    std::vector<char> seen(g.order(), 0);
    std::deque<Elem> queue{g.identity()};
    seen[g.identity()] = 1;
    int count = 1;
    while (!queue.empty()) {
        Elem cur = queue.front();
        queue.pop_front();
        for (Elem m : s.members) {
            Elem nxt = g.compose(cur, m);
            if (!seen[nxt]) {
                seen[nxt] = 1;
                ++count;
                queue.push_back(nxt);
            }
        }
    }
    return count == g.order();
}

std::vector<int> word_lengths(const GenSet& s) {
    return WordMetric(s).distances();
}

WordMetric::WordMetric(GenSet s) : genset_(std::move(s)) {
    const Group& g = *genset_.group;
    int n = g.order();
    dist_.assign(n, -1);
    pred_.assign(n, -1);
    pred_gen_.assign(n, -1);
    lex_rank_.assign(n, 0);

    dist_[g.identity()] = 0;
    std::vector<Elem> layer{g.identity()};
    while (!layer.empty()) {
        // candidate (pred-rank, generator) per newly reached element; the pair
        // orders extensions of lex-minimal words lexicographically
        std::map<Elem, std::pair<int, Elem>> best;
        for (Elem u : layer) {
            for (Elem m : genset_.members) {
                Elem v = g.compose(u, m);
                if (dist_[v] >= 0) continue;
                std::pair<int, Elem> key{lex_rank_[u], m};
                auto it = best.find(v);
                if (it == best.end() || key < it->second) best[v] = key;
            }
        }
        std::vector<std::pair<std::pair<int, Elem>, Elem>> ordered;
        ordered.reserve(best.size());
        for (auto& [v, key] : best) ordered.push_back({key, v});
        std::sort(ordered.begin(), ordered.end());
        int d = dist_[layer[0]] + 1;
        std::vector<Elem> next;
        int rank = 0;
        for (auto& [key, v] : ordered) {
            dist_[v] = d;
            lex_rank_[v] = rank++;
            pred_gen_[v] = key.second;
            // recover predecessor: v = p * gen  =>  p = v * gen^-1
            pred_[v] = g.compose(v, g.inverse(key.second));
            next.push_back(v);
        }
        layer = std::move(next);
    }

    std::vector<Elem> unreachable;
    for (Elem v = 0; v < n; ++v)
        if (dist_[v] < 0) unreachable.push_back(v);
    if (!unreachable.empty())
        throw ValidationError("generating set does not reach elements {" + join(unreachable, ",") + "}");
}

std::vector<Elem> WordMetric::min_word(Elem g) const {
    std::vector<Elem> word;
    Elem cur = g;
    while (dist_[cur] > 0) {
        word.push_back(pred_gen_[cur]);
        cur = pred_[cur];
    }
    std::reverse(word.begin(), word.end());
    return word;
}

TailPower WordMetric::tail_and_power(Elem g, Elem s) const {
    const Group& grp = *genset_.group;
    const auto& powers = grp.cyclic_subgroup(s);
    int ord = static_cast<int>(powers.size());

    TailPower out;
    out.tail = -1;
    Elem best_target = -1;
    for (int i = 0; i < ord; ++i) {
        Elem target = grp.compose(g, grp.inverse(powers[i]));  // g * s^-i
        int d = dist_[target];
        if (out.tail < 0 || d < out.tail ||
            (d == out.tail && lex_rank_[target] < lex_rank_[best_target])) {
            out.tail = d;
            best_target = target;
            out.witness_exponent = i;
        }
    }
    out.witness_word = min_word(best_target);
    if (out.tail == 0) {
        // smallest non-negative i with g = s^i
        for (int i = 0; i < ord; ++i)
            if (powers[i] == g) {
                out.power = i;
                break;
            }
    }
    return out;
}

TailPower tail_and_power(Elem g, Elem s, const GenSet& set) {
    return WordMetric(set).tail_and_power(g, s);
}

Automorphism::Automorphism(GroupPtr g, std::vector<Elem> map, std::vector<Elem> inv, int order)
    : group_(std::move(g)), map_(std::move(map)), inverse_map_(std::move(inv)), order_(order) {}

Automorphism Automorphism::from_map(GroupPtr g, std::vector<Elem> images) {
    const Group& grp = *g;
    int n = grp.order();
    if (static_cast<int>(images.size()) != n) throw ValidationError("automorphism map has wrong size");
    std::vector<char> seen(n, 0);
    for (Elem x : images) {
        if (x < 0 || x >= n || seen[x]) throw ValidationError("automorphism map is not a bijection");
        seen[x] = 1;
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (images[grp.compose(a, b)] != grp.compose(images[a], images[b]))
                throw ValidationError("map is not a homomorphism at (" + std::to_string(a) + "," +
                                      std::to_string(b) + ")");
    if (images[grp.identity()] != grp.identity())
        throw ValidationError("automorphism must fix the identity");

    std::vector<Elem> inv(n);
    for (Elem a = 0; a < n; ++a) inv[images[a]] = a;

    // multiplicative order of the permutation
    std::vector<Elem> acc(images);
    int order = 1;
    auto is_id = [&](const std::vector<Elem>& p) {
        for (Elem a = 0; a < n; ++a)
            if (p[a] != a) return false;
        return true;
    };
    while (!is_id(acc)) {
        std::vector<Elem> nxt(n);
        for (Elem a = 0; a < n; ++a) nxt[a] = images[acc[a]];
        acc = std::move(nxt);
        ++order;
        if (order > n) throw ValidationError("automorphism order exceeds group order");
    }
    return Automorphism(g, std::move(images), std::move(inv), order);
}

Automorphism Automorphism::identity(GroupPtr g) {
    std::vector<Elem> id(g->order());
    std::iota(id.begin(), id.end(), 0);
    return from_map(std::move(g), std::move(id));
}

Automorphism Automorphism::negation(GroupPtr g) {
    if (!g->is_abelian()) throw ValidationError("negation automorphism needs an abelian group");
    std::vector<Elem> m(g->order());
    for (Elem a = 0; a < g->order(); ++a) m[a] = g->inverse(a);
    return from_map(std::move(g), std::move(m));
}

namespace {

// Greedy generating sequence: indices whose successive closures grow the subgroup.
std::vector<Elem> generating_sequence(const Group& g) {
    std::vector<char> sub(g.order(), 0);
    sub[g.identity()] = 1;
    int size = 1;
    std::vector<Elem> gens;
    auto close = [&](Elem added) {
        std::deque<Elem> frontier;
        if (!sub[added]) {
            sub[added] = 1;
            ++size;
            frontier.push_back(added);
        }
        // closure under products with everything already present
        bool changed = true;
        while (changed) {
            changed = false;
            for (Elem a = 0; a < g.order(); ++a) {
                if (!sub[a]) continue;
                for (Elem b = 0; b < g.order(); ++b) {
                    if (!sub[b]) continue;
                    Elem c = g.compose(a, b);
                    if (!sub[c]) {
                        sub[c] = 1;
                        ++size;
                        changed = true;
                    }
                }
            }
        }
    };
    for (Elem cand = 0; cand < g.order() && size < g.order(); ++cand) {
        if (!sub[cand]) {
            gens.push_back(cand);
            close(cand);
        }
    }
    return gens;
}

}  // namespace

std::vector<Automorphism> involutory_automorphisms(const Group& g, GroupPtr handle) {
    int n = g.order();
    std::vector<Elem> gens = generating_sequence(g);
    std::vector<std::vector<Elem>> found;

    std::vector<Elem> partial(n, -1);
    partial[g.identity()] = g.identity();

    // extend the partial map to the closure of its defined part; false on conflict
    auto extend = [&](std::vector<Elem>& m) -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Elem a = 0; a < n; ++a) {
                if (m[a] < 0) continue;
                for (Elem b = 0; b < n; ++b) {
                    if (m[b] < 0) continue;
                    Elem ab = g.compose(a, b);
                    Elem img = g.compose(m[a], m[b]);
                    if (m[ab] < 0) {
                        m[ab] = img;
                        changed = true;
                    } else if (m[ab] != img) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    std::vector<std::vector<Elem>> order_buckets(n + 1);
    for (Elem a = 0; a < n; ++a) order_buckets[g.element_order(a)].push_back(a);

    std::function<void(std::size_t, std::vector<Elem>)> dfs = [&](std::size_t gi, std::vector<Elem> m) {
        if (gi == gens.size()) {
            for (Elem a = 0; a < n; ++a)
                if (m[a] < 0) return;  // should not happen once gens are mapped
            std::vector<char> seen(n, 0);
            for (Elem x : m) {
                if (seen[x]) return;
                seen[x] = 1;
            }
            // order <= 2
            for (Elem a = 0; a < n; ++a)
                if (m[m[a]] != a) return;
            found.push_back(m);
            return;
        }
        Elem src = gens[gi];
        if (m[src] >= 0) {
            dfs(gi + 1, std::move(m));
            return;
        }
        for (Elem cand : order_buckets[g.element_order(src)]) {
            auto next = m;
            next[src] = cand;
            if (extend(next)) dfs(gi + 1, std::move(next));
        }
    };
    dfs(0, partial);

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<Automorphism> out;
    out.reserve(found.size());
    for (auto& m : found) out.push_back(Automorphism::from_map(handle, m));
    return out;
}

std::vector<std::vector<int>> parse_cycle_notation(const std::string& text, int degree) {
    std::vector<std::vector<int>> perms;
    std::istringstream lines(text);
    std::string line;
    int max_point = degree - 1;
    std::vector<std::vector<std::vector<int>>> all_cycles;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) continue;
        std::vector<std::vector<int>> cycles;
        std::size_t i = 0;
        while (i < line.size()) {
            char c = line[i];
            if (c == ' ' || c == '\t' || c == '\r') { ++i; continue; }
            if (c != '(') throw ParseError("cycle notation: expected '(' in: " + line);
            std::size_t close = line.find(')', i);
            if (close == std::string::npos) throw ParseError("cycle notation: unclosed '(' in: " + line);
            std::istringstream body(line.substr(i + 1, close - i - 1));
            std::vector<int> cyc;
            int x;
            while (body >> x) {
                if (x < 0) throw ParseError("cycle notation: negative point");
                cyc.push_back(x);
                max_point = std::max(max_point, x);
            }
            if (cyc.empty()) throw ParseError("cycle notation: empty cycle in: " + line);
            cycles.push_back(std::move(cyc));
            i = close + 1;
        }
        all_cycles.push_back(std::move(cycles));
    }
    int deg = max_point + 1;
    if (deg <= 0) throw ParseError("cycle notation: no points found");
    for (auto& cycles : all_cycles) {
        std::vector<int> p(deg);
        std::iota(p.begin(), p.end(), 0);
        for (auto& cyc : cycles) {
            for (std::size_t j = 0; j < cyc.size(); ++j) {
                int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
                p[from] = to;
            }
        }
        // verify it is a permutation (repeated points in cycles would break it)
        std::vector<char> seen(deg, 0);
        for (int x : p) {
            if (seen[x]) throw ParseError("cycle notation: repeated point");
            seen[x] = 1;
        }
        perms.push_back(std::move(p));
    }
    return perms;
}

std::string to_cycle_notation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    std::string out;
    for (int start = 0; start < n; ++start) {
        if (seen[start] || perm[start] == start) {
            seen[start] = 1;
            continue;
        }
        out += '(';
        int cur = start;
        bool first = true;
        while (!seen[cur]) {
            if (!first) out += ' ';
            out += std::to_string(cur);
            seen[cur] = 1;
            first = false;
            cur = perm[cur];
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace pursuit
