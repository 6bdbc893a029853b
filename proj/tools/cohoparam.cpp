#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cohoparam/cohomology.hpp"
#include "cohoparam/errors.hpp"
#include "cohoparam/json_io.hpp"
#include "cohoparam/packets.hpp"
#include "cohoparam/params.hpp"
#include "cohoparam/transfer.hpp"
#include "cohoparam/verify.hpp"
#include "cohoparam/weyl.hpp"

using namespace cohoparam;

namespace {

enum Exit { kOk = 0, kUsage = 2, kUnsupported = 3, kMathCheck = 4, kSuiteFailure = 5 };

struct Config {
  std::string format = "table";
  std::string group;
  std::string weight;
  std::string levi;
  std::string k = "O";
  std::string embedding;
  std::string param;
  int n = 0;
  std::string disc = "trivial";
  std::string suite = "all";
  int max_n = 0;
  int max_rank = 0;
};

bool json_out(const Config& c) {
  if (c.format != "table" && c.format != "json") throw InputError("--format must be table or json");
  return c.format == "json";
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

KFlavor k_flavor(const std::string& s) {
  if (s == "O") return KFlavor::O;
  if (s == "SO") return KFlavor::SO;
  throw InputError("--k must be O or SO");
}

std::vector<int> levi_subset(const std::string& text, std::size_t rank) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int i = 0;
    try {
      i = std::stoi(item);
    } catch (const std::exception&) {
      throw InputError("malformed --levi entry '" + item + "'");
    }
    if (i < 1 || static_cast<std::size_t>(i) > rank)
      throw InputError("--levi entry " + item + " outside 1.." + std::to_string(rank));
    out.push_back(i - 1);
  }
  return out;
}

int cmd_enumerate(const Config& c) {
  bool js = json_out(c);
  GroupDescriptor g = GroupDescriptor::parse(c.group);
  HalfIntVector lambda = HalfIntVector::parse(c.weight);
  ParameterList list;
  list.group = g.to_string();
  list.weight = lambda;
  if (g.family == GroupFamily::GLC) {
    for (const auto& e : enumerate_complex_cohomological(g.n(), lambda)) list.parameters.push_back({e.param, e.subset});
  } else {
    RootDatum d = build_classical_dual(g);
    for (const auto& p : enumerate_cohomological(d, lambda)) list.parameters.push_back({cohom_to_gl_atoms(p), p.subset});
  }
  if (js) {
    print(to_json(list));
  } else {
    for (const auto& rec : list.parameters)
      std::visit([](const auto& p) { std::cout << p.to_string() << "\n"; }, rec.param);
  }
  return kOk;
}

int cmd_packet(const Config& c) {
  bool js = json_out(c);
  CatalogEntry cat = compact_weyl_catalog(GroupDescriptor::parse(c.group), k_flavor(c.k));
  PacketDescriptor p = packet(cat, levi_subset(c.levi, cat.datum.rank()));
  if (js) {
    print(to_json(p));
  } else {
    std::cout << "size " << p.size() << "\n";
    for (const auto& m : p.members) std::cout << m.rep.to_string() << "  " << m.label << "  " << m.h_dim << "\n";
  }
  return kOk;
}

int cmd_transfer(const Config& c) {
  bool js = json_out(c);
  int disc = 0;
  if (c.disc == "nontrivial" || c.disc == "1") {
    disc = 1;
  } else if (c.disc != "trivial" && c.disc != "0") {
    throw InputError("--disc must be trivial or nontrivial");
  }
  TransferResult r = transfer_parameter(parse_embedding(c.embedding), GLParameter::parse(c.param), c.n, disc);
  if (js) {
    print(to_json(r));
  } else {
    std::cout << "source: " << r.source.to_string() << "\n"
              << "target: " << r.target_text() << "\n"
              << "rho check: " << (r.rho_ok ? "ok" : "failed") << " " << r.rho_source.to_string() << " -> "
              << r.rho_target.to_string() << "\n"
              << "source cohomological: " << (r.source_cohomological ? "yes" : "no") << "\n"
              << "target cohomological: " << (r.target_cohomological ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_cohomology_sum(const Config& c) {
  bool js = json_out(c);
  CatalogEntry cat = compact_weyl_catalog(GroupDescriptor::parse(c.group), k_flavor(c.k));
  PacketSum s = packet_cohomology_sum(cat, levi_subset(c.levi, cat.datum.rank()));
  if (js) {
    Json j = to_json(s);
    j["group"] = cat.group.to_string();
    print(j);
  } else {
    std::cout << "value " << s.value << "\npacket size " << s.packet_size << "\ndouble coset sum "
              << s.double_coset_sum << "\nclosed form " << s.closed_form << "\n";
    if (s.levi_sum) std::cout << "levi sum " << *s.levi_sum << "\n";
    if (s.gl_formula) std::cout << "gl formula " << *s.gl_formula << "\n";
    if (s.floor_text)
      std::cout << "floor text " << *s.floor_text << (s.floor_text_discrepancy ? " (flagged)" : "") << "\n";
  }
  return kOk;
}

int cmd_innerforms(const Config& c) {
  bool js = json_out(c);
  std::optional<CompactDescriptor> compact;
  try {
    compact = CompactDescriptor::parse(c.group);
  } catch (const InputError&) {
  }
  if (compact) {
    auto f = innerform_sum_compact(*compact);
    if (js) {
      print(to_json(f));
    } else {
      for (const auto& cls : f.classes)
        std::cout << cls.label << "  orbit " << cls.orbit_size << "  stabilizer " << cls.stabilizer_order << "\n";
      std::cout << "sum " << f.sum << "\n";
    }
    return kOk;
  }
  auto f = innerform_sum_quasisplit(GroupDescriptor::parse(c.group));
  if (js) {
    print(to_json(f));
  } else {
    for (const auto& t : f.terms) std::cout << t.form << "  index " << t.index << "  betti " << t.betti << "\n";
    std::cout << "index sum " << f.index_sum << " = 2^" << f.e << "\nbetti sum " << f.betti_sum << " = 2^"
              << f.a + f.b + f.e << "\n";
  }
  return kOk;
}

int cmd_verify(const Config& c) {
  bool js = json_out(c);
  SuiteOptions o;
  if (c.max_n < 0 || c.max_rank < 0) throw InputError("caps must be positive");
  if (c.max_n > 0) o.max_n = c.max_n;
  if (c.max_rank > 0) o.max_rank = c.max_rank;
  auto reports = run_suite(c.suite, o);
  std::size_t failed = 0;
  if (js) {
    print(to_json(reports));
  }
  for (const auto& r : reports) {
    for (const auto& ch : r.checks) {
      if (!js) std::cout << (ch.ok ? "ok           " : "discrepancy  ") << r.suite << "  " << ch.identity << "\n";
      if (!ch.ok) {
        ++failed;
        std::cerr << "failed: " << r.suite << " / " << ch.identity << "\n";
      }
    }
  }
  return failed ? kSuiteFailure : kOk;
}

int cmd_dump_weyl(const Config& c) {
  bool js = json_out(c);
  CatalogEntry cat = compact_weyl_catalog(GroupDescriptor::parse(c.group), k_flavor(c.k));
  if (js) {
    print(to_json(cat));
  } else {
    std::cout << "group " << cat.group.to_string() << "\ndual datum " << cat.datum.name << "\ntheta "
              << cat.theta.to_string() << "\n|W| " << cat.W.order() << "\n|W^theta| " << cat.W_theta.order()
              << "\n" << cat.K.label() << " of order " << cat.K.order() << "\nd " << cat.d << "\n(a,b,e) (" << cat.a
              << "," << cat.b << "," << cat.e << ")\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomological A-parameters of real classical groups"};
  app.require_subcommand(1);
  Config c;
  auto fmt = [&](CLI::App* s) { s->add_option("--format", c.format, "table or json"); };

  auto* en = app.add_subcommand("enumerate", "list cohomological parameters");
  en->add_option("--group", c.group)->required();
  en->add_option("--weight", c.weight)->required();
  fmt(en);

  auto* pk = app.add_subcommand("packet", "Adams-Johnson packet of a Levi subset");
  pk->add_option("--group", c.group)->required();
  pk->add_option("--levi", c.levi, "1-based simple roots of the Levi");
  pk->add_option("--k", c.k, "O or SO (GL(n,R) only)");
  fmt(pk);

  auto* tr = app.add_subcommand("transfer", "transfer a parameter along an embedding of dual groups");
  tr->add_option("--embedding", c.embedding)->required();
  tr->add_option("--param", c.param)->required();
  tr->add_option("--n", c.n);
  tr->add_option("--disc", c.disc, "trivial or nontrivial");
  fmt(tr);

  auto* cs = app.add_subcommand("cohomology-sum", "total cohomology of a packet");
  cs->add_option("--group", c.group)->required();
  cs->add_option("--levi", c.levi);
  cs->add_option("--k", c.k);
  fmt(cs);

  auto* inf = app.add_subcommand("innerforms", "pure inner form sums");
  inf->add_option("--group", c.group)->required();
  fmt(inf);

  auto* ve = app.add_subcommand("verify", "run verification suites");
  ve->add_option("--suite", c.suite);
  ve->add_option("--max-n", c.max_n);
  ve->add_option("--max-rank", c.max_rank);
  fmt(ve);

  auto* dw = app.add_subcommand("dump-weyl", "print the compact Weyl catalog entry");
  dw->add_option("--group", c.group)->required();
  dw->add_option("--k", c.k);
  fmt(dw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (en->parsed()) return cmd_enumerate(c);
    if (pk->parsed()) return cmd_packet(c);
    if (tr->parsed()) return cmd_transfer(c);
    if (cs->parsed()) return cmd_cohomology_sum(c);
    if (inf->parsed()) return cmd_innerforms(c);
    if (ve->parsed()) return cmd_verify(c);
    if (dw->parsed()) return cmd_dump_weyl(c);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return kUnsupported;
  } catch (const MathCheckError& e) {
    std::cerr << "math check failed: " << e.what() << "\n";
    return kMathCheck;
  }
  return kUsage;
}
