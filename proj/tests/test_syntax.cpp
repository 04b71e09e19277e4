#include "doctest.h"

#include "epc/syntax.hpp"
#include "support/generators.hpp"

using namespace epc;

namespace {

ProcPtr send(const Name &ch, const Value &v, ProcPtr cont) {
  return make_prefix(SendAct{ch, ValueTerm::value(v)}, std::move(cont));
}
ProcPtr send_var(const Name &ch, const Var &x, ProcPtr cont) {
  return make_prefix(SendAct{ch, ValueTerm::variable(x)}, std::move(cont));
}
ProcPtr recv(const Name &ch, const Var &x, ProcPtr cont) {
  return make_prefix(ReceiveAct{ch, x}, std::move(cont));
}
ProcPtr tau(ProcPtr cont) { return make_prefix(TauAct{}, std::move(cont)); }

} // namespace

TEST_SUITE("syntax") {

TEST_CASE("free names ignore restricted channels and receive binders") {
  // (new a)('a<t>.0 | b(x).0) has only b free
  ProcPtr p = make_restrict(
      "a", make_par(send("a", "t", make_nil()), recv("b", "x", make_nil())));
  CHECK(free_names(*p) == std::set<Name>{"b"});
}

TEST_CASE("free names collect channels of sends and receives") {
  // 'com<r>.(attack(v1).attack(v0).0)
  ProcPtr p = send("com", "r", recv("attack", "v1", recv("attack", "v0", make_nil())));
  CHECK(free_names(*p) == std::set<Name>{"com", "attack"});
}

TEST_CASE("substitution instantiates free payload variables") {
  ProcPtr p = send_var("b", "x", make_nil());
  ProcPtr q = substitute_value(p, "x", "t2");
  CHECK(congruent(*q, *send("b", "t2", make_nil())));
}

TEST_CASE("substitution respects rebinding receives") {
  // a(x).'b<x>.0 with x := r is unchanged: the receive shadows x
  ProcPtr p = recv("a", "x", send_var("b", "x", make_nil()));
  ProcPtr q = substitute_value(p, "x", "r");
  CHECK(canonical_key(*q) == canonical_key(*p));
  CHECK(to_string(*q) == to_string(*p));
}

TEST_CASE("substitution reaches under non-binding constructs") {
  ProcPtr p = make_par(send_var("a", "x", make_nil()),
                       make_sum(send_var("b", "x", make_nil()),
                                recv("c", "y", send_var("a", "x", make_nil()))));
  ProcPtr q = substitute_value(p, "x", "t1");
  ProcPtr expect = make_par(send("a", "t1", make_nil()),
                            make_sum(send("b", "t1", make_nil()),
                                     recv("c", "y", send("a", "t1", make_nil()))));
  CHECK(congruent(*q, *expect));
}

TEST_CASE("parallel is commutative and drops nil at both levels") {
  ProcPtr p = tau(make_nil());
  LProcPtr m1 = make_mpar(make_agent(p, "1"), make_agent(make_nil(), "2"));
  LProcPtr m2 = make_mpar(make_agent(make_nil(), "2"), make_agent(p, "1"));
  CHECK(congruent(*m1, *m2));
  // process level unit: P | 0 == P
  CHECK(congruent(*make_par(p, make_nil()), *p));
  // agent leaves are not units: {0}_2 stays
  CHECK_FALSE(congruent(*m1, *make_agent(p, "1")));
}

TEST_CASE("restrictions commute") {
  ProcPtr body = make_par(send("a", "t", make_nil()), send("b", "t", make_nil()));
  ProcPtr ab = make_restrict("a", make_restrict("b", body));
  ProcPtr ba = make_restrict("b", make_restrict("a", body));
  CHECK(congruent(*ab, *ba));
}

TEST_CASE("alpha-equivalent restrictions agree") {
  ProcPtr pa = make_restrict("a", send("a", "t", make_nil()));
  ProcPtr pb = make_restrict("b", send("b", "t", make_nil()));
  CHECK(congruent(*pa, *pb));
  CHECK_FALSE(congruent(*pa, *make_restrict("b", send("a", "t", make_nil()))));
}

TEST_CASE("scope extrusion holds exactly when the name is not free") {
  ProcPtr p = send("b", "t", make_nil());
  ProcPtr q = send("a", "t", make_nil());
  // b not free in q's channel a: P | (new a)Q == (new a)(P | Q)
  CHECK(congruent(*make_par(p, make_restrict("a", q)),
                  *make_restrict("a", make_par(p, q))));
  // a free in 'a<t>.0: the two differ
  ProcPtr uses_a = send("a", "t", make_nil());
  CHECK_FALSE(congruent(*make_par(uses_a, make_restrict("a", q)),
                        *make_restrict("a", make_par(uses_a, q))));
}

TEST_CASE("restriction over nil is not nil") {
  CHECK_FALSE(congruent(*make_restrict("a", make_nil()), *make_nil()));
}

TEST_CASE("choice is associative, commutative, idempotent, with unit") {
  ProcPtr x = tau(make_nil());
  ProcPtr y = send("a", "t1", make_nil());
  ProcPtr z = recv("b", "x", make_nil());
  CHECK(congruent(*make_sum(x, make_sum(y, z)), *make_sum(make_sum(x, y), z)));
  CHECK(congruent(*make_sum(x, y), *make_sum(y, x)));
  CHECK(congruent(*make_sum(x, x), *x));
  CHECK(congruent(*make_sum(x, make_nil()), *x));
  CHECK_FALSE(congruent(*make_sum(x, y), *x));
}

TEST_CASE("distinct prefixes stay distinct") {
  CHECK_FALSE(congruent(*send("a", "t", make_nil()), *send("b", "t", make_nil())));
  CHECK_FALSE(congruent(*send("a", "t", make_nil()), *recv("a", "x", make_nil())));
  CHECK_FALSE(congruent(*make_agent(make_nil(), "1"), *make_agent(make_nil(), "2")));
}

TEST_CASE("congruence axioms hold on random terms") {
  testgen::TermGen gen(1234);
  for (int i = 0; i < 300; ++i) {
    ProcPtr t1 = gen.random_proc(4);
    ProcPtr t2 = gen.random_proc(3);
    ProcPtr t3 = gen.random_proc(3);
    CHECK(congruent(*make_par(t1, t2), *make_par(t2, t1)));
    CHECK(congruent(*make_par(t1, make_par(t2, t3)),
                    *make_par(make_par(t1, t2), t3)));
    CHECK(congruent(*make_par(t1, make_nil()), *t1));
    CHECK(congruent(*make_sum(t1, make_sum(t2, t3)),
                    *make_sum(make_sum(t1, t2), t3)));
    CHECK(congruent(*make_sum(t1, make_nil()), *t1));
    CHECK(congruent(*make_sum(t1, t2), *make_sum(t2, t1)));
    CHECK(congruent(*make_restrict("a", make_restrict("b", t1)),
                    *make_restrict("b", make_restrict("a", t1))));
    // extrusion with a binder that is fresh by construction
    CHECK(congruent(*make_par(t1, make_restrict("ww_ext", t2)),
                    *make_restrict("ww_ext", make_par(t1, t2))));
    ProcPtr av = gen.alpha_variant(t1);
    CHECK(congruent(*t1, *av));
    // congruence is reflexive and keys are stable
    CHECK(canonical_key(*t1) == canonical_key(*t1));
  }
}

TEST_CASE("canonical keys are invariant under nested rearrangement") {
  testgen::TermGen gen(77);
  for (int i = 0; i < 100; ++i) {
    ProcPtr a = gen.random_proc(3);
    ProcPtr b = gen.random_proc(3);
    ProcPtr c = gen.random_proc(3);
    ProcPtr lhs = make_par(make_sum(a, b), make_par(c, make_nil()));
    ProcPtr rhs = make_par(c, make_sum(b, a));
    CHECK(congruent(*lhs, *rhs));
  }
}

TEST_CASE("labeled terms follow the same axioms") {
  testgen::TermGen gen(99);
  for (int i = 0; i < 100; ++i) {
    LProcPtr m1 = gen.random_lproc(3, {"1", "2"});
    LProcPtr m2 = gen.random_lproc(3, {"3"});
    CHECK(congruent(*make_mpar(m1, m2), *make_mpar(m2, m1)));
    LProcPtr l3 = gen.random_lproc(2, {"4"});
    CHECK(congruent(*make_mpar(m1, make_mpar(m2, l3)),
                    *make_mpar(make_mpar(m1, m2), l3)));
    CHECK(congruent(*make_mrestrict("a", make_mrestrict("b", m1)),
                    *make_mrestrict("b", make_mrestrict("a", m1))));
    CHECK(congruent(*make_mpar(m1, make_mrestrict("ww_m", m2)),
                    *make_mrestrict("ww_m", make_mpar(m1, m2))));
  }
}

TEST_CASE("labels print canonically") {
  CHECK(label_text(VisibleAction{true, "attack", "p0", "UAV0"}) ==
        "'attack<p0>@UAV0");
  CHECK(label_text(VisibleAction{false, "c", "t1", "2"}) == "c<t1>@2");
  CHECK(label_text(SyncTauAction{"GCS", "UAV0"}) == "tau(GCS,UAV0)");
  CHECK(GroundAction{GroundAction::Kind::send, "a", "t"}.text() == "'a<t>");
  CHECK(GroundAction{GroundAction::Kind::receive, "a", "t"}.text() == "a<t>");
  CHECK(GroundAction{GroundAction::Kind::tau, "", ""}.text() == "tau");
}

} // TEST_SUITE
