#include "cohoparam/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cohoparam/errors.hpp"

namespace cohoparam {

std::size_t SuiteReport::failed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; }));
}

Json to_json(const Check& c) {
  return Json{{"identity", c.identity},
              {"lhs", c.lhs},
              {"rhs", c.rhs},
              {"witnesses", c.witnesses},
              {"status", c.ok ? "ok" : "discrepancy"}};
}

Json to_json(const std::vector<SuiteReport>& reports) {
  Json out;
  Json suites = Json::array();
  std::size_t failed = 0, total = 0;
  for (const auto& r : reports) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    suites.push_back(Json{{"suite", r.suite},
                          {"checks", checks},
                          {"passed", r.checks.size() - r.failed()},
                          {"failed", r.failed()}});
    failed += r.failed();
    total += r.checks.size();
  }
  out["suites"] = suites;
  out["total"] = total;
  out["failed"] = failed;
  return out;
}

namespace {

void run(SuiteReport& r, const std::string& id, const std::function<void(Check&)>& f) {
  Check c;
  c.identity = id;
  try {
    f(c);
  } catch (const Error& e) {
    c.ok = false;
    c.witnesses.push_back(std::string("error: ") + e.what());
  }
  r.checks.push_back(std::move(c));
}

void equal(Check& c, const Json& lhs, const Json& rhs) {
  c.lhs = lhs;
  c.rhs = rhs;
  c.ok = c.ok && lhs == rhs;
}

void same_set(Check& c, std::vector<std::string> got, std::vector<std::string> expected) {
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  std::vector<std::string> missing, extra;
  std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra));
  for (const auto& m : missing) c.witnesses.push_back("missing " + m);
  for (const auto& e : extra) c.witnesses.push_back("unexpected " + e);
  equal(c, got, expected);
}

RootDatum dual(const std::string& g) { return build_classical_dual(GroupDescriptor::parse(g)); }

std::vector<std::string> texts(const std::vector<GLParameter>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::vector<GLParameter> enumerate_gl(const RootDatum& d, const HalfIntVector& lambda) {
  std::vector<GLParameter> out;
  for (const auto& p : enumerate_cohomological(d, lambda)) out.push_back(cohom_to_gl_parameter(p));
  return out;
}

std::vector<std::string> subset_texts(const std::vector<CohomParameter>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.subset.size(); ++i) s += (i ? "," : "") + std::to_string(p.subset[i] + 1);
    out.push_back(s + "}");
  }
  return out;
}

// ------------------------------------------------------------ golden tables

SuiteReport paper_tables(const SuiteOptions& o) {
  SuiteReport r{"paper-tables", {}};
  const std::map<int, std::vector<std::string>> gl_lists = {
      {2, {"s1[1]", "w0[2]"}},
      {3, {"s2[1]+w0[1]", "w0[3]"}},
      {4, {"s3[1]+s1[1]", "s3[1]+w0[2]", "s2[2]", "w0[4]"}},
      {5, {"w0[5]", "s4[1]+w0[3]", "s3[2]+w0[1]", "s4[1]+s2[1]+w0[1]"}},
  };
  for (const auto& [n, expected] : gl_lists) {
    run(r, "gl" + std::to_string(n) + "-list", [&, n = n](Check& c) {
      same_set(c, texts(enumerate_gl_real(n, HalfIntVector::zero(static_cast<std::size_t>(n)))), expected);
    });
  }
  run(r, "gl4-levi-subsets", [](Check& c) {
    equal(c, subset_texts(enumerate_cohomological(dual("GL(4,R)"), HalfIntVector::zero(4))),
          Json{"{}", "{2}", "{1,3}", "{1,2,3}"});
  });
  const std::vector<std::string> sp4 = {"s4[1]+s2[1]+w0[1]", "s3[2]+w0[1]", "s4[1]+w1[3]", "w0[5]"};
  const std::vector<std::string> so23 = {"s3[1]+s1[1]", "s2[2]", "s3[1]+w0[2]", "w0[4]"};
  run(r, "sp4-list", [&](Check& c) { same_set(c, texts(enumerate_gl(dual("Sp(4,R)"), HalfIntVector::zero(2))), sp4); });
  run(r, "so23-list", [&](Check& c) { same_set(c, texts(enumerate_gl(dual("SO(2,3)"), HalfIntVector::zero(2))), so23); });
  auto routed = [](int n, const std::string& family, Check& c) {
    std::vector<std::string> out;
    for (const auto& p : enumerate_gl_real(n, HalfIntVector::zero(static_cast<std::size_t>(n)))) {
      Route rt = route_selfdual(p);
      if (rt.family != family) c.witnesses.push_back(p.to_string() + " routed to " + rt.family);
      c.ok = c.ok && rt.family == family;
      out.push_back(rt.routed.to_string());
    }
    return out;
  };
  run(r, "gl5-routes-to-sp4", [&](Check& c) { same_set(c, routed(5, "Sp(4,R)", c), sp4); });
  run(r, "gl4-routes-to-so23", [&](Check& c) { same_set(c, routed(4, "SO(p,q), p+q=5", c), so23); });

  const std::vector<std::string> u21 = {"(0)[3]", "(1)[1]+(0)[1]+(-1)[1]", "(1/2)[2]+(-1)[1]", "(1)[1]+(-1/2)[2]"};
  run(r, "u21-list", [&](Check& c) {
    std::vector<std::string> got;
    for (const auto& p : enumerate_cohomological(dual("U(2,1)"), HalfIntVector::zero(3)))
      got.push_back(cohom_to_complex_parameter(p).to_string());
    same_set(c, got, u21);
  });
  run(r, "gl3c-list", [&](Check& c) {
    std::vector<std::string> got;
    for (const auto& e : enumerate_complex_cohomological(3, HalfIntVector::zero(3))) got.push_back(e.param.to_string());
    same_set(c, got, u21);
  });
  run(r, "u21-relevance", [&](Check& c) {
    Json flags = Json::object();
    for (const auto& t : u21) {
      Relevance rel = uprq_relevance(ComplexParameter::parse(t), 2, 1);
      flags[t] = rel.relevant;
      if (!rel.relevant)
        c.witnesses.push_back("flagged: " + t + " is listed for U(2,1) but |p-q| = " + std::to_string(rel.gap) +
                              " > #{n_i = 1} = " + std::to_string(rel.ones));
    }
    equal(c, flags,
          Json{{"(0)[3]", false}, {"(1)[1]+(0)[1]+(-1)[1]", true}, {"(1/2)[2]+(-1)[1]", true}, {"(1)[1]+(-1/2)[2]", true}});
  });
  run(r, "complex-cascade", [&](Check& c) {
    int max_n = o.max_n.value_or(10);
    Json bad = Json::array();
    std::size_t entries = 0;
    for (int n = 1; n <= max_n; ++n) {
      auto list = enumerate_complex_cohomological(n, HalfIntVector::zero(static_cast<std::size_t>(n)));
      if (list.size() != (std::size_t{1} << (n - 1))) bad.push_back("count for n = " + std::to_string(n));
      for (const auto& e : list) {
        ++entries;
        int before = 0;
        for (std::size_t j = 0; j < e.blocks.size(); ++j) {
          HalfInt d = HalfInt::from_twice(n - (2 * before + e.blocks[j]));
          if (e.param.atoms()[j].d != d || e.param.atoms()[j].n != e.blocks[j]) bad.push_back(e.param.to_string());
          before += e.blocks[j];
        }
      }
    }
    c.witnesses = bad;
    equal(c, bad.size(), 0);
    c.witnesses.push_back("entries checked: " + std::to_string(entries));
  });
  run(r, "inf-char-examples", [](Check& c) {
    equal(c,
          Json{inf_char_gl(GLParameter::parse("s1[1]")).orbit_rep.to_string(),
               inf_char_gl(GLParameter::parse("s2[2]")).orbit_rep.to_string(),
               inf_char_abstract(enumerate_cohomological(dual("GL(4,R)"), HalfIntVector::zero(4))[2]).orbit_rep.to_string()},
          Json{"(1/2, -1/2)", "(3/2, 1/2, -1/2, -3/2)", "(3/2, 1/2, -1/2, -3/2)"});
  });
  run(r, "speh-weights", [](Check& c) {
    equal(c,
          Json{speh_coefficient_weight(2, 2).to_string(), speh_coefficient_weight(3, 2).to_string(),
               speh_coefficient_weight(3, 1).to_string()},
          Json{"(0, 0, 0, 0)", "(1/2, 1/2, -1/2, -1/2)", "(1, -1)"});
  });
  run(r, "speh-in-list", [](Check& c) {
    Json got = Json::array();
    for (auto [d, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}}) {
      auto list = texts(enumerate_gl_real(2 * m, speh_coefficient_weight(d, m)));
      std::string want = GLParameter({Atom::two_dim(d, m)}, HalfInt(0)).to_string();
      got.push_back(std::find(list.begin(), list.end(), want) != list.end());
    }
    equal(c, got, Json{true, true, true, true});
  });
  run(r, "tempered-companion-examples", [](Check& c) {
    equal(c,
          Json{tempered_companion(GLParameter::parse("s2[2]")).to_string(),
               tempered_companion(GLParameter::parse("w0[3]")).to_string(),
               tempered_companion(GLParameter::parse("s4[1]+s2[1]+w0[1]")).to_string()},
          Json{"s3[1]+s1[1]", "s2[1]+w0[1]", "s4[1]+s2[1]+w0[1]"});
  });
  run(r, "tempered-parameter-gl3", [](Check& c) {
    auto p = tempered_parameter(dual("GL(3,R)"), HalfIntVector::zero(3));
    equal(c, Json{p.chi_exponent.to_string(), cohom_to_gl_parameter(p).to_string()}, Json{"(1, 0, -1)", "s2[1]+w0[1]"});
  });
  run(r, "selfdual-examples", [](Check& c) {
    Json got = Json::array();
    for (const char* t : {"s3[1]+s1[1]", "s2[2]", "s1[2]"}) {
      SelfDualInfo i = classify_selfdual(GLParameter::parse(t));
      got.push_back(to_string(i.type) + "/" + det_string(i.det));
    }
    equal(c, got, Json{"symplectic/1", "symplectic/1", "orthogonal/1"});
  });
  run(r, "so-even-dichotomy", [](Check& c) {
    Dichotomy two = so_even_dichotomy(GLParameter::parse("s3[2]"));
    Dichotomy one = so_even_dichotomy(GLParameter::parse("s3[2]+w0[3]+w1[1]"));
    if (!two.textual_parity_agrees) c.witnesses.push_back("textual parity criterion disagrees for s3[2]");
    equal(c,
          Json{two.case_number, two.mu->to_string(), det_string(two.det), one.case_number, one.source->to_string(),
               one.disc, one.basechange_cohomological},
          Json{2, "(1/2, 1/2, -1/2, -1/2)", "1", 1, "s3[2]+w0[3]", 1, false});
  });
  run(r, "transfer-examples", [](Check& c) {
    auto a = transfer_parameter(Embedding::SpGL, GLParameter::parse("s2[2]"), 2);
    auto b = transfer_parameter(Embedding::Diag, GLParameter::parse("s1[1]"));
    auto d = transfer_parameter(Embedding::SOOddInSOEven, GLParameter::parse("w0[5]"), 0, 0);
    equal(c,
          Json{a.target_text(), a.source_cohomological, a.target_cohomological, b.target_text(),
               b.target_cohomological, d.target_text(), d.target_cohomological},
          Json{"s2[2]", true, true, "(1/2)[1]+(-1/2)[1] | (1/2)[1]+(-1/2)[1]", true, "w0[5]+w0[1]", true});
  });
  run(r, "highest-weight-transport", [](Check& c) {
    equal(c,
          Json{transfer_highest_weight(Embedding::SpGL, HalfIntVector{3, 1}).to_string(),
               (2 * push_forward(Embedding::SOGL, dual("Sp(4,R)").rho_check)).to_string()},
          Json{"(3, 1, -1, -3)", "(4, 2, 0, -2, -4)"});
  });
  run(r, "packet-examples", [](Check& c) {
    equal(c,
          Json{packet(GroupDescriptor::parse("U(2,1)"), std::vector<int>{0}).size(),
               theta_stable_parabolic_count(GroupDescriptor::parse("U(2,1)"), {}),
               theta_stable_parabolic_count(GroupDescriptor::parse("Sp(4,R)"), {}),
               packet(GroupDescriptor::parse("GL(4,R)"), std::vector<int>{0, 2}, KFlavor::SO).size(),
               packet(GroupDescriptor::parse("GL(5,R)"), std::vector<int>{1, 2}).size()},
          Json{2, 3, 4, 2, 1});
  });
  run(r, "unitary-packet-sizes", [](Check& c) {
    equal(c,
          Json{packet_size_unitary(2, 1, 2, 1).r_values, packet_size_unitary(3, 1, 4, 0).r_values,
               packet_size_unitary(2, 2, 2, 2).r_values},
          Json{Json{1, 2}, Json{3}, Json{0, 1, 2}});
  });
  run(r, "poincare-examples", [](Check& c) {
    equal(c,
          Json{symmetric_space_poincare(SpaceTag::U, 2).to_string(),
               symmetric_space_poincare(SpaceTag::U_Sp, 4).to_string(),
               symmetric_space_poincare(SpaceTag::U_SO, 2).to_string(),
               levi_cohomology({2, 2}, KFlavor::O).total(), levi_cohomology({1, 2, 1}, KFlavor::O).total(),
               levi_cohomology({1, 2, 1}, KFlavor::SO).total()},
          Json{"1+t+t^3+t^4", "1+t+t^5+t^6", "1+t+t^2+t^3", 4, 4, 8});
  });
  run(r, "packet-sum-examples", [](Check& c) {
    equal(c,
          Json{packet_cohomology_sum(GroupDescriptor::parse("GL(4,R)"), {1}).value,
               packet_cohomology_sum(GroupDescriptor::parse("GL(4,R)"), {0, 2}, KFlavor::SO).value,
               packet_cohomology_sum(GroupDescriptor::parse("U(2,1)"), {}).value},
          Json{4, 8, 3});
  });
  run(r, "innerform-examples", [](Check& c) {
    auto u3 = innerform_sum_compact(CompactDescriptor::parse("U(3)"));
    auto sp2 = innerform_sum_compact(CompactDescriptor::parse("Sp(2)"));
    Json orbits = Json::array(), stabs = Json::array();
    for (const auto& k : sp2.classes) {
      orbits.push_back(k.orbit_size);
      stabs.push_back(k.stabilizer_order);
    }
    equal(c, Json{u3.sum, innerform_sum_compact(CompactDescriptor::parse("U(1)")).sum, sp2.sum, orbits, stabs},
          Json{8, 2, 4, Json{1, 2, 1}, Json{8, 4, 8}});
  });
  return r;
}

// --------------------------------------------------------------- packet sums

std::vector<GroupDescriptor> catalog_groups(int max_total, int max_unitary, int max_sp, int max_so) {
  std::vector<GroupDescriptor> out;
  for (int n = 1; n <= max_total; ++n) out.push_back({GroupFamily::GLR, n, 0});
  for (int n = 1; n <= max_unitary; ++n)
    for (int p = n; 2 * p >= n; --p) out.push_back({GroupFamily::U, p, n - p});
  for (int n = 1; n <= max_sp; ++n) out.push_back({GroupFamily::Sp, 2 * n, 0});
  for (int t = 3; t <= max_so; ++t) {
    if (t == 8) continue;
    for (int p = t; 2 * p >= t; --p)
      if (t - p >= 0 && !(t % 2 == 0 && t / 2 < 2)) out.push_back({GroupFamily::SO, p, t - p});
  }
  return out;
}

std::vector<KFlavor> flavors(const GroupDescriptor& g) {
  if (g.family == GroupFamily::GLR && g.n() % 2 == 0) return {KFlavor::O, KFlavor::SO};
  return {KFlavor::O};
}

std::string k_suffix(const GroupDescriptor& g, KFlavor k) {
  if (g.family != GroupFamily::GLR) return "";
  return k == KFlavor::SO ? " K=SO" : " K=O";
}

SuiteReport packet_sums(const SuiteOptions& o) {
  SuiteReport r{"packet-sums", {}};
  int max_n = o.max_n.value_or(8);
  for (const auto& g : catalog_groups(max_n, std::min(max_n, 5), std::min(max_n / 2, 3), std::min(max_n, 7))) {
    for (KFlavor k : flavors(g)) {
      run(r, "packet-sum " + g.to_string() + k_suffix(g, k), [&](Check& c) {
        CatalogEntry cat = compact_weyl_catalog(g, k);
        std::set<std::uint64_t> values;
        bool flagged = false;
        for (const auto& s : self_associate_subsets(cat.datum)) {
          PacketSum ps = packet_cohomology_sum(cat, s);
          values.insert(ps.value);
          if (ps.floor_text_discrepancy && !flagged) {
            flagged = true;
            c.witnesses.push_back("flagged: floor(N/2) text gives " + std::to_string(*ps.floor_text) +
                                  ", computed " + std::to_string(ps.value));
          }
        }
        std::uint64_t closed = (std::uint64_t{1} << cat.d) * (cat.W_theta.order() / cat.K.order());
        c.witnesses.push_back("subsets: " + std::to_string(self_associate_subsets(cat.datum).size()));
        equal(c, Json(std::vector<std::uint64_t>(values.begin(), values.end())), Json::array({closed}));
      });
    }
  }
  for (int N = 1; N <= std::max(max_n, 1); ++N) {
    for (KFlavor k : {KFlavor::O, KFlavor::SO}) {
      if (k == KFlavor::SO && N % 2 == 1) continue;
      run(r, "partition-independence N=" + std::to_string(N) + (k == KFlavor::SO ? " K=SO" : " K=O"), [&](Check& c) {
        RootDatum d = dual("GL(" + std::to_string(N) + ",R)");
        std::set<std::uint64_t> totals;
        for (const auto& s : self_associate_subsets(d)) {
          auto blocks = compositions_blocks(N, s);
          std::uint64_t t = levi_cohomology(blocks, k).total();
          // n_0 = 0 under K = SO: the packet has two members.
          if (k == KFlavor::SO && blocks.size() % 2 == 0) t *= 2;
          totals.insert(t);
        }
        std::uint64_t expected = std::uint64_t{1} << ((N + 1) / 2 + (k == KFlavor::SO ? 1 : 0));
        equal(c, Json(std::vector<std::uint64_t>(totals.begin(), totals.end())), Json::array({expected}));
      });
    }
  }
  return r;
}

// ---------------------------------------------------------------- inner forms

SuiteReport innerforms(const SuiteOptions& o) {
  SuiteReport r{"innerforms", {}};
  int max_rank = o.max_rank.value_or(8);
  std::vector<CompactDescriptor> groups;
  for (int n = 1; n <= max_rank; ++n) groups.push_back({CompactFamily::U, n});
  for (int n = 1; n <= max_rank; ++n) groups.push_back({CompactFamily::Sp, n});
  for (int n = 2; n <= 2 * max_rank + 1; ++n) groups.push_back({CompactFamily::SO, n});
  for (const auto& g : groups) {
    run(r, "compact " + g.to_string(), [&](Check& c) {
      auto f = innerform_sum_compact(g);
      for (const auto& cls : f.classes)
        c.witnesses.push_back(cls.label + ": " + std::to_string(cls.orbit_size) + " x " +
                              std::to_string(cls.stabilizer_order));
      equal(c, f.sum, std::uint64_t{1} << g.rank());
    });
  }
  int max_n = o.max_n.value_or(8);
  std::vector<GroupDescriptor> qs;
  for (int n = 1; n <= max_n; ++n) qs.push_back({GroupFamily::U, n - n / 2, n / 2});
  for (int n = 1; n <= max_n; ++n) qs.push_back({GroupFamily::GLR, n, 0});
  for (int n = 1; n <= std::min(max_n / 2, 4); ++n) qs.push_back({GroupFamily::Sp, 2 * n, 0});
  for (const auto& g : qs) {
    run(r, "quasi-split " + g.to_string(), [&](Check& c) {
      auto f = innerform_sum_quasisplit(g);
      for (const auto& t : f.terms) c.witnesses.push_back(t.form + ": " + std::to_string(t.index));
      equal(c, Json{f.index_sum, f.betti_sum},
            Json{std::uint64_t{1} << f.e, std::uint64_t{1} << (f.a + f.b + f.e)});
    });
  }
  run(r, "quasi-split SO partial", [](Check& c) {
    bool refused = false;
    try {
      innerform_sum_quasisplit(GroupDescriptor::parse("SO(2,3)"));
    } catch (const UnsupportedError&) {
      refused = true;
    }
    equal(c, refused, true);
  });
  return r;
}

// ------------------------------------------------------------ weyl identities

SuiteReport weyl_identities(const SuiteOptions& o) {
  SuiteReport r{"weyl-identities", {}};
  int max_rank = o.max_rank.value_or(4);
  for (const auto& g : catalog_groups(max_rank + 1, max_rank + 1, max_rank, 2 * max_rank + 1)) {
    for (KFlavor k : flavors(g)) {
      CatalogEntry cat;
      try {
        cat = compact_weyl_catalog(g, k);
      } catch (const Error&) {
        continue;
      }
      if (cat.datum.rank() > static_cast<std::size_t>(max_rank) || cat.datum.ambient_dim > static_cast<std::size_t>(max_rank + 1))
        continue;
      run(r, "double-coset-sum " + g.to_string() + k_suffix(g, k), [&](Check& c) {
        Json bad = Json::array();
        std::uint64_t closed = (std::uint64_t{1} << cat.d) * (cat.W_theta.order() / cat.K.order());
        for (const auto& s : self_associate_subsets(cat.datum)) {
          WeylSubgroup L = intersect(levi_weyl_group(cat.datum, s), cat.W_theta, "L");
          std::size_t total = 0;
          std::uint64_t hsum = 0;
          for (const auto& dc : double_cosets(cat.K, L, cat.W_theta)) {
            total += dc.size;
            WeylElement wi = dc.rep.inverse();
            std::size_t meet = 0;
            for (const auto& l : L.elements()) meet += cat.K.contains(dc.rep * l * wi) ? 1 : 0;
            if (dc.size * meet != cat.K.order() * L.order()) bad.push_back("coset size " + dc.rep.to_string());
            hsum += (std::uint64_t{1} << cat.d) * L.order() / meet;
          }
          if (total != cat.W_theta.order() || hsum != closed) bad.push_back(Json(s).dump());
        }
        c.witnesses = bad;
        equal(c, bad.size(), 0);
      });
      run(r, "longest-element " + g.to_string() + k_suffix(g, k), [&](Check& c) {
        WeylElement w0 = longest_element(cat.datum);
        equal(c, Json{(w0 * w0).is_identity(), w0.act(cat.datum.rho_check) == -cat.datum.rho_check,
                      cat.W.order() == weyl_group_order(cat.datum)},
              Json{true, true, true});
      });
    }
  }
  run(r, "unitary-packet-size-vs-brute", [&](Check& c) {
    Json bad = Json::array();
    int cases = 0;
    int top = std::min(2 * max_rank, 8);
    for (int N = 1; N <= top; ++N) {
      WeylSubgroup SN = symmetric_group(static_cast<std::size_t>(N));
      for (int A = 0; A <= N; ++A)
        for (int m = 0; m <= N; ++m) {
          ++cases;
          if (packet_size_unitary(A, N - A, m, N - m).size != packet_size_unitary_brute(A, N - A, m, N - m, SN))
            bad.push_back(Json{A, N - A, m, N - m});
        }
    }
    c.witnesses = bad;
    c.witnesses.push_back("cases: " + std::to_string(cases));
    equal(c, bad.size(), 0);
  });
  run(r, "principal-sl2-residual", [&](Check& c) {
    Json bad = Json::array();
    for (const auto& g : catalog_groups(max_rank + 1, 0, max_rank, 2 * max_rank + 1)) {
      RootDatum d = build_classical_dual(g);
      std::vector<int> theta = d.theta();
      for (std::uint32_t mask = 0; mask < (1u << d.rank()); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < d.rank(); ++i)
          if ((mask >> i) & 1u) s.push_back(static_cast<int>(i));
        StandardParabolic P(d, s);
        std::vector<int> opp = levi_opposition(P);
        Sl2Coefficients co = principal_sl2_coefficients(P, &opp);
        if (!co.residual_max.is_zero()) bad.push_back(g.to_string() + " " + Json(s).dump());
      }
    }
    c.witnesses = bad;
    equal(c, bad.size(), 0);
  });
  return r;
}

}  // namespace

std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "paper-tables") return {paper_tables(opts)};
  if (name == "packet-sums") return {packet_sums(opts)};
  if (name == "innerforms") return {innerforms(opts)};
  if (name == "weyl-identities") return {weyl_identities(opts)};
  if (name == "all") return {paper_tables(opts), packet_sums(opts), innerforms(opts), weyl_identities(opts)};
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace cohoparam
