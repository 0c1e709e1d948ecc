#include "verl/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "verl/algebra.hpp"
#include "verl/coset.hpp"
#include "verl/error.hpp"
#include "verl/group_file.hpp"
#include "verl/matrix.hpp"
#include "verl/transfer.hpp"

namespace verl {

namespace {

struct Options {
  std::string group_file;
  std::string subgroup;
  std::string kernel;
  std::string element;
  std::string side = "left";
  std::string alpha;
  std::string ring = "rat";
  std::vector<std::string> reps;
  std::optional<std::uint64_t> resample_seed;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t resamples = 20;
};

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw Error(ErrorCode::ParseError, "side must be left or right, got '" + s + "'");
}

Elem element(const FiniteGroup& g, const std::string& label) {
  auto e = g.find_label(label);
  if (!e) throw Error(ErrorCode::ParseError, "unknown element label '" + label + "'");
  return *e;
}

std::string members_text(const FiniteGroup& g, std::span<const Elem> elems) {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? ", " : "") + g.label(elems[i]);
  return s + "}";
}

/// Named subgroups from the file, plus "whole", "trivial" and, relative to a
/// given H, "derived" for [H,H].
Subgroup lookup_subgroup(const GroupDefinition& def, const std::string& name, const Subgroup* within) {
  if (auto it = def.subgroups.find(name); it != def.subgroups.end()) return it->second;
  if (name == "trivial") return Subgroup::trivial(def.group);
  if (name == "whole") return within ? *within : Subgroup::whole(def.group);
  if (name == "derived" && within) return commutator_subgroup(*within);
  throw Error(ErrorCode::ParseError, "unknown subgroup '" + name + "'");
}

class Session {
 public:
  explicit Session(const Options& o) : o_(o), def_(parse_group_file(o.group_file)) {}

  const FiniteGroup& group() const { return def_.group; }

  Subgroup subgroup() const { return lookup_subgroup(def_, o_.subgroup, nullptr); }

  QuotientGroup quotient() const {
    const Subgroup h = subgroup();
    const Subgroup k = lookup_subgroup(def_, o_.kernel, &h);
    if (!is_normal(h, k)) throw Error(ErrorCode::NotNormal, "'" + o_.kernel + "' is not normal in '" + o_.subgroup + "'");
    return quotient_group(h, k);
  }

  CosetSystem system(Side side) const {
    const Subgroup h = subgroup();
    CosetSystem cs = [&] {
      if (o_.reps.empty()) return decompose(h, side);
      std::vector<Elem> reps;
      for (const auto& l : o_.reps) reps.push_back(element(group(), l));
      return decompose(h, side, std::span<const Elem>(reps));
    }();
    if (o_.resample_seed) cs = resample(cs, *o_.resample_seed);
    return cs;
  }

 private:
  const Options& o_;
  GroupDefinition def_;
};

void cmd_show(const Options& o, std::ostream& out) {
  const GroupDefinition def = parse_group_file(o.group_file);
  const auto& g = def.group;
  out << "order " << g.order() << '\n';
  out << "identity " << g.label(g.identity()) << '\n';
  out << "abelian " << (g.is_abelian() ? "yes" : "no") << '\n';
  out << "elements";
  for (const auto& l : g.labels()) out << ' ' << l;
  out << '\n' << "table\n";
  for (Elem i = 0; i < g.order(); ++i) {
    out << "  " << g.label(i) << ':';
    for (Elem j = 0; j < g.order(); ++j) out << ' ' << g.label(g.mul(i, j));
    out << '\n';
  }
  for (const auto& [name, h] : def.subgroups) {
    out << "subgroup " << name << " order " << h.order() << ' ' << members_text(g, h.members()) << '\n';
  }
}

void cmd_cosets(const Options& o, std::ostream& out) {
  const Session s(o);
  const CosetSystem cs = s.system(parse_side(o.side));
  const auto& g = s.group();
  out << "side " << o.side << '\n' << "index " << cs.index() << '\n';
  for (std::size_t i = 0; i < cs.index(); ++i) {
    out << "coset " << i << " rep " << g.label(cs.reps()[i]) << ' ' << members_text(g, coset_members(cs, i))
        << '\n';
  }
}

void cmd_transfer(const Options& o, std::ostream& out) {
  const Session s(o);
  const QuotientGroup q = s.quotient();
  const Side side = parse_side(o.side);
  const CosetSystem cs = s.system(side);
  const Elem g = element(s.group(), o.element);
  const TransferValue v = side == Side::left ? left_transfer(q, cs, g) : right_transfer(q, cs, g);
  out << q.cosets().label(v.coset) << " sign=" << (v.sign > 0 ? "+1" : "-1") << '\n';
}

void cmd_det(const Options& o, std::ostream& out) {
  const Session s(o);
  const QuotientGroup q = s.quotient();
  const Ring ring = Ring::from_name(o.ring);
  const AlgebraElement alpha = parse_element(ring, s.group(), o.alpha);
  out << render(det_transfer(q, s.system(Side::left), alpha)) << '\n';
}

void cmd_sign(const Options& o, std::ostream& out) {
  const Session s(o);
  const CosetSystem cs = s.system(parse_side(o.side));
  out << (sign_of(cs, element(s.group(), o.element)) > 0 ? "+1" : "-1") << '\n';
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Session s(o);
  const QuotientGroup q = s.quotient();
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.samples = o.samples;
  vo.resamples = o.resamples;
  vo.ring = Ring::from_name(o.ring);
  const VerificationReport report = verify_properties(q, s.system(Side::left), vo);
  out << report.render();
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transfers and noncommutative determinants over finite groups", "verl"};
  app.require_subcommand(1);
  Options o;

  auto group_opt = [&](CLI::App* c) { c->add_option("--group", o.group_file, "group definition file")->required(); };
  auto subgroup_opt = [&](CLI::App* c) { c->add_option("--subgroup", o.subgroup, "subgroup name (H)")->required(); };
  auto kernel_opt = [&](CLI::App* c) {
    c->add_option("--kernel", o.kernel, "normal subgroup of H (K); also trivial, whole, derived")->required();
  };
  auto reps_opts = [&](CLI::App* c) {
    c->add_option("--reps", o.reps, "coset representatives by label, comma separated")->delimiter(',');
    c->add_option("--resample-seed", o.resample_seed, "draw random representatives with this seed");
  };
  auto side_opt = [&](CLI::App* c) {
    c->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
  };
  auto ring_opt = [&](CLI::App* c) { c->add_option("--ring", o.ring, "int, rat or mod:<n>")->capture_default_str(); };

  auto* show = app.add_subcommand("show", "print the group and its named subgroups");
  group_opt(show);

  auto* cosets = app.add_subcommand("cosets", "list coset representatives");
  group_opt(cosets);
  subgroup_opt(cosets);
  side_opt(cosets);
  reps_opts(cosets);

  auto* transfer = app.add_subcommand("transfer", "evaluate the transfer G -> H/K at an element");
  group_opt(transfer);
  subgroup_opt(transfer);
  kernel_opt(transfer);
  side_opt(transfer);
  reps_opts(transfer);
  transfer->add_option("--element", o.element, "element label")->required();

  auto* det = app.add_subcommand("det", "determinant of an algebra element in R(H/K)");
  group_opt(det);
  subgroup_opt(det);
  kernel_opt(det);
  reps_opts(det);
  ring_opt(det);
  det->add_option("--alpha", o.alpha, "algebra element, e.g. \"2*a - 1/2*e\"")->required();

  auto* sign = app.add_subcommand("sign", "sign of the coset permutation of an element");
  group_opt(sign);
  subgroup_opt(sign);
  side_opt(sign);
  reps_opts(sign);
  sign->add_option("--element", o.element, "element label")->required();

  auto* verify = app.add_subcommand("verify", "run the transfer and determinant identity checks");
  group_opt(verify);
  subgroup_opt(verify);
  kernel_opt(verify);
  reps_opts(verify);
  ring_opt(verify);
  verify->add_option("--seed", o.seed, "random seed")->capture_default_str();
  verify->add_option("--samples", o.samples, "random algebra samples")->capture_default_str();
  verify->add_option("--resamples", o.resamples, "random representative sets per side")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("verl");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*show) cmd_show(o, out);
    if (*cosets) cmd_cosets(o, out);
    if (*transfer) cmd_transfer(o, out);
    if (*det) cmd_det(o, out);
    if (*sign) cmd_sign(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace verl
