#include <algorithm>
#include <deque>

#include "epc/syntax.hpp"

/* Canonical keys for structural congruence.  Bound names render as de Bruijn
 * style indices so alpha-variants agree; parallel and choice spines are
 * flattened and sorted; nil factors/summands are dropped; restrictions are
 * hoisted over parallel groups (justified by alpha-renaming the binder fresh
 * before applying scope extrusion) and a maximal restriction chain picks the
 * binder order whose key is lexicographically least. */

namespace epc {
namespace {

struct EnvEntry {
  char kind; // 'n' channel binder, 'v' value variable binder
  std::string name;
};

using Env = std::vector<EnvEntry>;

std::string bound_ref(const Env &env, char kind, const std::string &name,
                      const char *free_open) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    if (it->kind == kind && it->name == name) {
      auto idx = static_cast<std::size_t>(it - env.rbegin());
      return "@" + std::to_string(idx);
    }
  }
  return std::string(free_open) + name + "~";
}

/* Rename free occurrences of channel `from` to `to`; `to` is always a fresh
 * sentinel so capture cannot occur. */
ProcPtr rename_name(const ProcPtr &p, const Name &from, const Name &to) {
  if (std::holds_alternative<ProcessTerm::Nil>(p->node) ||
      std::holds_alternative<ProcessTerm::ConstRef>(p->node))
    return p;
  if (const auto *pre = std::get_if<ProcessTerm::Prefix>(&p->node)) {
    Action act = pre->act;
    if (auto *s = std::get_if<SendAct>(&act)) {
      if (s->channel == from) s->channel = to;
    } else if (auto *r = std::get_if<ReceiveAct>(&act)) {
      if (r->channel == from) r->channel = to;
    }
    return make_prefix(std::move(act), rename_name(pre->cont, from, to));
  }
  if (const auto *res = std::get_if<ProcessTerm::Restrict>(&p->node)) {
    if (res->name == from) return p;
    return make_restrict(res->name, rename_name(res->body, from, to));
  }
  if (const auto *par = std::get_if<ProcessTerm::Par>(&p->node))
    return make_par(rename_name(par->left, from, to),
                    rename_name(par->right, from, to));
  if (const auto *sum = std::get_if<ProcessTerm::Sum>(&p->node))
    return make_sum(rename_name(sum->left, from, to),
                    rename_name(sum->right, from, to));
  const auto &seq = std::get<ProcessTerm::Seq>(p->node);
  return make_seq(rename_name(seq.head, from, to),
                  rename_name(seq.cont, from, to));
}

LProcPtr rename_name(const LProcPtr &m, const Name &from, const Name &to) {
  if (const auto *ap = std::get_if<LabeledProcessTerm::AgentProc>(&m->node))
    return make_agent(rename_name(ap->proc, from, to), ap->agent);
  if (const auto *par = std::get_if<LabeledProcessTerm::MPar>(&m->node))
    return make_mpar(rename_name(par->left, from, to),
                     rename_name(par->right, from, to));
  const auto &res = std::get<LabeledProcessTerm::MRestrict>(m->node);
  if (res.name == from) return m;
  return make_mrestrict(res.name, rename_name(res.body, from, to));
}

constexpr std::size_t kPermCap = 6;

class Canon {
public:
  std::string proc_key(const ProcPtr &p, Env &env) {
    if (std::holds_alternative<ProcessTerm::Nil>(p->node)) return "0";
    if (const auto *c = std::get_if<ProcessTerm::ConstRef>(&p->node))
      return "[" + c->name + "]";
    if (const auto *pre = std::get_if<ProcessTerm::Prefix>(&p->node)) {
      if (const auto *s = std::get_if<SendAct>(&pre->act)) {
        std::string pay =
            s->payload.is_var
                ? bound_ref(env, 'v', s->payload.text, "?")
                : "=" + s->payload.text + "~";
        return "s" + bound_ref(env, 'n', s->channel, "~") + "<" + pay + ">." +
               proc_key(pre->cont, env);
      }
      if (const auto *r = std::get_if<ReceiveAct>(&pre->act)) {
        std::string head = "r" + bound_ref(env, 'n', r->channel, "~") + "(_).";
        env.push_back({'v', r->binder});
        std::string rest = proc_key(pre->cont, env);
        env.pop_back();
        return head + rest;
      }
      return "t." + proc_key(pre->cont, env);
    }
    if (const auto *seq = std::get_if<ProcessTerm::Seq>(&p->node))
      return "(;" + proc_key(seq->head, env) + "," + proc_key(seq->cont, env) +
             ")";
    if (std::holds_alternative<ProcessTerm::Sum>(p->node)) {
      std::vector<ProcPtr> kids;
      flatten_sum(p, kids);
      std::vector<std::string> keys;
      for (const auto &k : kids) {
        std::string key = proc_key(k, env);
        if (key != "0") keys.push_back(std::move(key));
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      if (keys.empty()) return "0";
      if (keys.size() == 1) return keys[0];
      return "(+" + join(keys) + ")";
    }
    // Par or Restrict: one hoisted group.
    return group_key<ProcPtr>(
        p, env, /*drop_nil=*/true,
        [](const ProcPtr &t) { return std::get_if<ProcessTerm::Restrict>(&t->node) != nullptr; },
        [](const ProcPtr &t) {
          const auto &r = std::get<ProcessTerm::Restrict>(t->node);
          return std::pair<Name, ProcPtr>(r.name, r.body);
        },
        [](const ProcPtr &t, std::deque<ProcPtr> &work) {
          if (const auto *par = std::get_if<ProcessTerm::Par>(&t->node)) {
            work.push_back(par->left);
            work.push_back(par->right);
            return true;
          }
          return false;
        },
        [](const ProcPtr &t) {
          return std::holds_alternative<ProcessTerm::Nil>(t->node);
        },
        [this](const ProcPtr &t, Env &e) { return proc_key(t, e); },
        [](const ProcPtr &t, const Name &from, const Name &to) {
          return rename_name(t, from, to);
        });
  }

  std::string m_key(const LProcPtr &m, Env &env) {
    if (const auto *ap = std::get_if<LabeledProcessTerm::AgentProc>(&m->node))
      return "{" + proc_key(ap->proc, env) + "}" + ap->agent + "~";
    return group_key<LProcPtr>(
        m, env, /*drop_nil=*/false,
        [](const LProcPtr &t) {
          return std::get_if<LabeledProcessTerm::MRestrict>(&t->node) != nullptr;
        },
        [](const LProcPtr &t) {
          const auto &r = std::get<LabeledProcessTerm::MRestrict>(t->node);
          return std::pair<Name, LProcPtr>(r.name, r.body);
        },
        [](const LProcPtr &t, std::deque<LProcPtr> &work) {
          if (const auto *par = std::get_if<LabeledProcessTerm::MPar>(&t->node)) {
            work.push_back(par->left);
            work.push_back(par->right);
            return true;
          }
          return false;
        },
        [](const LProcPtr &) { return false; },
        [this](const LProcPtr &t, Env &e) { return m_key(t, e); },
        [](const LProcPtr &t, const Name &from, const Name &to) {
          return rename_name(t, from, to);
        });
  }

private:
  int sentinel_counter_ = 0;

  Name fresh_sentinel() { return "\x01" + std::to_string(sentinel_counter_++); }

  static void flatten_sum(const ProcPtr &p, std::vector<ProcPtr> &out) {
    if (const auto *sum = std::get_if<ProcessTerm::Sum>(&p->node)) {
      flatten_sum(sum->left, out);
      flatten_sum(sum->right, out);
    } else {
      out.push_back(p);
    }
  }

  static std::string join(const std::vector<std::string> &keys) {
    std::string out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i) out += ",";
      out += keys[i];
    }
    return out;
  }

  template <class T, class IsRes, class ResParts, class TryPar, class IsNil,
            class KeyFn, class Rename>
  std::string group_key(const T &t, Env &env, bool drop_nil, IsRes is_res,
                        ResParts res_parts, TryPar try_par, IsNil is_nil,
                        KeyFn key_fn, Rename rename) {
    std::vector<Name> binders;
    std::vector<T> factors;
    std::deque<T> work{t};
    while (!work.empty()) {
      T u = work.front();
      work.pop_front();
      while (is_res(u)) {
        auto [name, body] = res_parts(u);
        Name s = fresh_sentinel();
        binders.push_back(s);
        u = rename(body, name, s);
      }
      if (try_par(u, work)) continue;
      if (drop_nil && is_nil(u)) continue;
      factors.push_back(u);
    }

    auto combined = [&](Env &e) {
      std::vector<std::string> keys;
      keys.reserve(factors.size());
      for (const auto &f : factors) keys.push_back(key_fn(f, e));
      std::sort(keys.begin(), keys.end());
      if (keys.empty()) return std::string("0");
      if (keys.size() == 1) return keys[0];
      return "(|" + join(keys) + ")";
    };

    if (binders.empty()) return combined(env);

    // Binders of one chain commute: pick the order with the least key.
    // Chains longer than the cap keep their collected order.
    std::vector<std::size_t> order(binders.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::string best;
    bool first = true;
    do {
      std::size_t before = env.size();
      for (std::size_t i : order) env.push_back({'n', binders[i]});
      std::string key = combined(env);
      env.resize(before);
      if (first || key < best) {
        best = std::move(key);
        first = false;
      }
      if (binders.size() > kPermCap) break;
    } while (std::next_permutation(order.begin(), order.end()));
    return "(n" + std::to_string(binders.size()) + ":" + best + ")";
  }
};

} // namespace

CanonicalKey canonical_key(const ProcessTerm &p) {
  Canon canon;
  Env env;
  return canon.proc_key(std::make_shared<const ProcessTerm>(p), env);
}

CanonicalKey canonical_key(const LabeledProcessTerm &m) {
  Canon canon;
  Env env;
  return canon.m_key(std::make_shared<const LabeledProcessTerm>(m), env);
}

} // namespace epc
