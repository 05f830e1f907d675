// Copyright 2026 The bicyclic authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bicyclic/report.hpp"

namespace bicyclic::cli {

  namespace {

    using json = nlohmann::ordered_json;

    struct Options {
      std::string            format = "text";
      index_t                cap    = kDefaultExponentCap;
      std::optional<index_t> bound, kmax, p, m, n, t, idx, count, pmax;
      std::string            side;
      bool                   serial = false;
    };

    struct Context {
      Options const&                            opt;
      std::map<std::string, std::string> const& pos;
      std::vector<std::string> const&           rest;
      std::ostream&                             out;
      std::string const&                        command;

      [[nodiscard]] bool json_mode() const {
        return opt.format == "json";
      }

      [[nodiscard]] std::string const& arg(std::string const& name) const {
        return pos.at(name);
      }

      [[nodiscard]] bool has(std::string const& name) const {
        auto it = pos.find(name);
        return it != pos.end() && !it->second.empty();
      }

      [[nodiscard]] Element element(std::string const& name) const {
        return parse_element(arg(name), opt.cap);
      }

      [[nodiscard]] Execution exec() const {
        return opt.serial ? Execution::Serial : Execution::Parallel;
      }

      [[nodiscard]] ShiftSide side(ShiftSide fallback) const {
        if (opt.side.empty()) {
          return fallback;
        }
        return opt.side == "left" ? ShiftSide::LeftShift : ShiftSide::RightShift;
      }

      void emit(json result, std::vector<std::string> const& lines) const {
        if (json_mode()) {
          json j{{"command", command}, {"result", std::move(result)}};
          out << j.dump(2) << '\n';
          return;
        }
        for (auto const& line : lines) {
          out << line << '\n';
        }
      }
    };

    index_t parse_count(std::string const& text) {
      index_t value = 0;
      auto const* first = text.data();
      auto const* last  = text.data() + text.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (text.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("expected a non-negative integer, got '" + text + "'");
      }
      return value;
    }

    std::vector<std::string> element_lines(auto const& elements) {
      std::vector<std::string> lines;
      lines.push_back("count: " + std::to_string(elements.size()));
      for (auto const& x : elements) {
        lines.push_back(to_string(x));
      }
      return lines;
    }

    json element_array(auto const& elements) {
      json arr = json::array();
      for (auto const& x : elements) {
        arr.push_back(x);
      }
      return arr;
    }

    std::string cell_line(Element s, Element x, index_t t, Verdict const& v) {
      return "s=" + to_string(s) + " x=" + to_string(x)
             + " t=" + std::to_string(t) + " " + describe(v);
    }

    std::vector<std::string> suite_lines(SuiteReport const& r) {
      std::vector<std::string> lines;
      lines.push_back("suite: " + r.name);
      lines.push_back("checks: " + std::to_string(r.checks));
      lines.push_back("failures: " + std::to_string(r.failure_count));
      for (auto const& f : r.failures) {
        lines.push_back("failure: " + f);
      }
      for (auto const& note : r.notes) {
        lines.push_back("note: " + note);
      }
      lines.push_back(std::string("result: ") + (r.passed() ? "PASS" : "FAIL"));
      return lines;
    }

    using Handler = std::function<int(Context const&)>;

    struct Command {
      std::string              name;
      std::string              help;
      std::vector<std::string> required;
      std::vector<std::string> optional;
      std::vector<std::string> flags;
      Handler                  handler;
      bool                     variadic = false;
    };

    // ---- algebra ----

    int cmd_mul(Context const& c) {
      auto r = c.element("x") * c.element("y");
      c.emit(json(r), {to_string(r)});
      return kExitOk;
    }

    int cmd_pow(Context const& c) {
      auto r = power(c.element("x"), parse_count(c.arg("n")));
      c.emit(json(r), {to_string(r)});
      return kExitOk;
    }

    int cmd_inv(Context const& c) {
      auto r = invert(c.element("x"));
      c.emit(json(r), {to_string(r)});
      return kExitOk;
    }

    int cmd_leq(Context const& c) {
      bool r = natural_leq(c.element("x"), c.element("y"));
      c.emit(json(r), {r ? "true" : "false"});
      return kExitOk;
    }

    int cmd_solve(Context const& c) {
      auto a = c.element("a");
      auto rhs = c.element("c");
      auto sols = c.side(ShiftSide::LeftShift) == ShiftSide::LeftShift
                      ? solve_left(a, rhs)
                      : solve_right(rhs, a);
      c.emit(element_array(sols), element_lines(sols));
      return kExitOk;
    }

    int cmd_reduce(Context const& c) {
      auto w = parse_word(c.arg("word"));
      auto r = reduce_word(w);
      c.emit(json(r), {to_string(r)});
      return kExitOk;
    }

    // ---- subsemigroups ----

    int cmd_enumerate(Context const& c) {
      auto desc = parse_descriptor(c.arg("desc"), c.opt.cap);
      auto xs   = enumerate(desc, c.opt.bound.value_or(6));
      c.emit(element_array(xs), element_lines(xs));
      return kExitOk;
    }

    int cmd_closure(Context const& c) {
      std::vector<Element> gens;
      for (auto const& g : c.rest) {
        gens.push_back(parse_element(g, c.opt.cap));
      }
      if (gens.empty()) {
        throw PreconditionError("closure needs at least one generator");
      }
      auto cl    = closure(gens, c.opt.bound.value_or(12));
      auto lines = element_lines(cl.elements);
      lines.insert(lines.begin(),
                   std::string("saturated: ") + (cl.saturated ? "true" : "false"));
      c.emit(json(cl), lines);
      return kExitOk;
    }

    int cmd_census(Context const& c) {
      auto desc = parse_descriptor(c.arg("desc"), c.opt.cap);
      auto cs   = idempotent_census(desc, c.opt.bound.value_or(12));
      std::vector<std::string> lines{
          "verdict: " + std::string(to_string(cs.verdict)),
          "count: " + std::to_string(cs.count)};
      if (cs.witness) {
        lines.push_back("witness: " + to_string(cs.witness->first) + " "
                        + to_string(cs.witness->second));
      }
      lines.push_back("reason: " + cs.reason);
      c.emit(json(cs), lines);
      return kExitOk;
    }

    int cmd_prop1_family(Context const& c) {
      auto f = prop1_idempotent_family(c.element("u"), c.element("v"),
                                       c.opt.count.value_or(5));
      std::vector<std::string> lines{
          "family: b^(" + std::to_string(f.base) + "+" + std::to_string(f.kl)
          + "p) a^(" + std::to_string(f.base) + "+" + std::to_string(f.kl) + "p)"};
      for (auto const& m : f.prefix) {
        lines.push_back("p=" + std::to_string(m.p) + " u^lp=" + to_string(m.u_power)
                        + " v^kp=" + to_string(m.v_power) + " uv=" + to_string(m.uv)
                        + " vu=" + to_string(m.vu) + (m.ok ? " ok" : " FAIL"));
      }
      lines.push_back(std::string("verified: ") + (f.verified() ? "true" : "false"));
      c.emit(json(f), lines);
      return f.verified() ? kExitOk : kExitVerification;
    }

    int cmd_thm1_nbhd(Context const& c) {
      auto desc = parse_descriptor(c.arg("desc"), c.opt.cap);
      auto nb   = thm1_neighborhood(desc, c.element("x"), c.opt.bound.value_or(6));
      std::vector<std::string> lines{"i0: " + std::to_string(nb.i0)};
      auto el = element_lines(nb.a_set);
      lines.insert(lines.end(), el.begin(), el.end());
      lines.push_back(std::string("verified: ") + (nb.verified() ? "true" : "false"));
      c.emit(json(nb), lines);
      return nb.verified() ? kExitOk : kExitVerification;
    }

    // ---- symbolic sets ----

    int cmd_nbhd(Context const& c) {
      auto top = parse_topology(c.arg("top"), c.opt.cap);
      auto v   = basic_nbhd(top, c.element("x"), c.opt.idx.value_or(1));
      c.emit(json(v), {to_string(v)});
      return kExitOk;
    }

    int cmd_image(Context const& c) {
      auto s   = c.element("s");
      auto set = parse_symset(c.arg("set"), c.opt.cap);
      auto r   = c.side(ShiftSide::LeftShift) == ShiftSide::LeftShift
                     ? left_image(s, set)
                     : right_image(set, s);
      c.emit(json(r), {to_string(r)});
      return kExitOk;
    }

    int cmd_product(Context const& c) {
      auto r = product(parse_symset(c.arg("A"), c.opt.cap),
                       parse_symset(c.arg("B"), c.opt.cap));
      c.emit(json(r), {to_string(r)});
      return kExitOk;
    }

    int cmd_subset(Context const& c) {
      auto cert = subset(parse_symset(c.arg("A"), c.opt.cap),
                         parse_symset(c.arg("B"), c.opt.cap));
      std::vector<std::string> lines{cert.holds ? "true" : "false"};
      if (cert.counterexample) {
        lines.push_back("counterexample: " + to_string(*cert.counterexample));
      }
      lines.push_back("covering_bound: " + std::to_string(cert.covering_bound));
      c.emit(json(cert), lines);
      return kExitOk;
    }

    // ---- continuity ----

    int cmd_check_shift(Context const& c) {
      auto top  = parse_topology(c.arg("top"), c.opt.cap);
      auto side = c.side(ShiftSide::LeftShift);
      auto kmax = c.opt.kmax.value_or(kDefaultKMax);
      if (c.has("s") != c.has("x")) {
        throw PreconditionError("check-shift takes both s and x, or neither");
      }
      if (c.has("s")) {
        auto s = c.element("s");
        auto x = c.element("x");
        auto t = c.opt.t.value_or(1);
        auto v = check_shift_at(top, side, s, x, t, kmax);
        c.emit(json(ShiftCell{s, x, t, v}), {cell_line(s, x, t, v)});
        return kExitOk;
      }
      auto grid   = shift_grid(top, side, c.opt.bound.value_or(4));
      auto report = check_shift(top, side, grid, c.opt.t.value_or(4), kmax, c.exec());
      std::vector<std::string> lines;
      for (auto const& cell : report.cells) {
        lines.push_back(cell_line(cell.s, cell.x, cell.t, cell.verdict));
      }
      lines.push_back("cells: " + std::to_string(report.cells.size())
                      + " continuous: " + std::to_string(report.continuous())
                      + " discontinuous: " + std::to_string(report.discontinuous())
                      + " refuted: " + std::to_string(report.refuted()));
      c.emit(json(report), lines);
      return kExitOk;
    }

    int cmd_check_joint(Context const& c) {
      auto top = parse_topology(c.arg("top"), c.opt.cap);
      auto x   = c.element("x");
      auto y   = c.element("y");
      auto t   = c.opt.t.value_or(1);
      auto v   = check_joint_at(top, x, y, t, c.opt.kmax.value_or(kDefaultKMax));
      json j{{"cell", json{{"x", x}, {"y", y}, {"t", t}}}};
      j.update(json(v));
      c.emit(j, {"x=" + to_string(x) + " y=" + to_string(y) + " t="
                 + std::to_string(t) + " " + describe(v)});
      return kExitOk;
    }

    int cmd_find_discontinuity(Context const& c) {
      auto top   = parse_topology(c.arg("top"), c.opt.cap);
      auto bound = c.opt.bound.value_or(4);
      auto w     = find_discontinuity(top, c.side(ShiftSide::RightShift), bound,
                                      c.opt.kmax.value_or(kDefaultKMax), c.exec());
      if (!w) {
        c.emit(json(nullptr), {"none up to bound " + std::to_string(bound)});
        return kExitOk;
      }
      c.emit(json(*w), {cell_line(w->s, w->x, w->t, Verdict{w->verdict})});
      return kExitOk;
    }

    // ---- verification suites ----

    int cmd_verify(Context const& c) {
      auto const& suite = c.arg("suite");
      auto const& o     = c.opt;
      SuiteReport r;
      if (suite == "core-oracle") {
        r = verify_core_oracle(o.bound.value_or(12), c.exec());
      } else if (suite == "prop1") {
        r = verify_prop1(o.bound.value_or(6), o.pmax.value_or(4));
      } else if (suite == "prop2") {
        r = verify_prop2_suite(o.p.value_or(2), o.m.value_or(0), o.n.value_or(2),
                               o.bound.value_or(6), o.kmax.value_or(kDefaultKMax),
                               c.exec());
      } else if (suite == "thm1") {
        r = verify_thm1(o.bound.value_or(6));
      } else if (suite == "thm2") {
        r = verify_thm2(o.bound.value_or(8));
      } else if (suite == "hausdorff") {
        std::vector<index_t> primes{2, 3};
        if (o.p) {
          primes = {*o.p};
        }
        r = verify_hausdorff(primes, o.bound.value_or(8), c.exec());
      } else {
        throw ParseError("unknown suite '" + suite
                         + "' (core-oracle, prop1, prop2, thm1, thm2, hausdorff)");
      }
      c.emit(json(r), suite_lines(r));
      return r.passed() ? kExitOk : kExitVerification;
    }

    std::vector<Command> commands() {
      return {
          {"mul", "multiply two elements", {"x", "y"}, {}, {}, cmd_mul},
          {"pow", "n-th power of an element", {"x", "n"}, {}, {}, cmd_pow},
          {"inv", "inverse of an element", {"x"}, {}, {}, cmd_inv},
          {"leq", "natural partial order x <= y", {"x", "y"}, {}, {}, cmd_leq},
          {"solve",
           "solutions of a x = c (--side left) or x a = c (--side right)",
           {"a", "c"},
           {},
           {"side"},
           cmd_solve},
          {"reduce", "normal form of a word over p/q (a/b)", {"word"}, {}, {},
           cmd_reduce},
          {"enumerate", "members of a descriptor up to --bound", {"desc"}, {},
           {"bound"}, cmd_enumerate},
          {"closure", "subsemigroup generated by elements, up to --bound", {}, {},
           {"bound"}, cmd_closure, true},
          {"census", "idempotent census of a descriptor", {"desc"}, {}, {"bound"},
           cmd_census},
          {"prop1-family", "idempotent family from a strict pair", {"u", "v"}, {},
           {"count"}, cmd_prop1_family},
          {"thm1-nbhd", "open finite neighbourhood of a point", {"desc", "x"}, {},
           {"bound"}, cmd_thm1_nbhd},
          {"nbhd", "basic neighbourhood V_idx(x)", {"top", "x"}, {}, {"idx"},
           cmd_nbhd},
          {"image", "s S (--side left) or S s (--side right)", {"s", "set"}, {},
           {"side"}, cmd_image},
          {"product", "exact product of two symbolic sets", {"A", "B"}, {}, {},
           cmd_product},
          {"subset", "decide A within B", {"A", "B"}, {}, {}, cmd_subset},
          {"check-shift", "shift continuity at one cell, or over a grid",
           {"top"}, {"s", "x"}, {"side", "t", "kmax", "bound", "serial"},
           cmd_check_shift},
          {"check-joint", "joint continuity of multiplication at (x, y)",
           {"top", "x", "y"}, {}, {"t", "kmax"}, cmd_check_joint},
          {"find-discontinuity", "first certified shift discontinuity",
           {"top"}, {}, {"side", "bound", "kmax", "serial"},
           cmd_find_discontinuity},
          {"verify", "run a verification suite", {"suite"}, {},
           {"bound", "kmax", "p", "m", "n", "pmax", "serial"}, cmd_verify},
      };
    }

    void add_flag(CLI::App* sub, std::string const& flag, Options& o) {
      static std::map<std::string, std::pair<std::optional<index_t> Options::*,
                                             char const*>> const numeric{
          {"bound", {&Options::bound, "size bound"}},
          {"kmax", {&Options::kmax, "largest source index searched"}},
          {"p", {&Options::p, "prime"}},
          {"m", {&Options::m, "first window row"}},
          {"n", {&Options::n, "last window row"}},
          {"t", {&Options::t, "target index"}},
          {"idx", {&Options::idx, "neighbourhood index"}},
          {"count", {&Options::count, "family prefix length"}},
          {"pmax", {&Options::pmax, "largest family parameter"}},
      };
      if (flag == "side") {
        sub->add_option("--side", o.side, "left or right")
            ->check(CLI::IsMember({"left", "right"}));
      } else if (flag == "serial") {
        sub->add_flag("--serial", o.serial, "use the serial sweep");
      } else {
        auto const& [member, help] = numeric.at(flag);
        sub->add_option("--" + flag, o.*member, help);
      }
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options                            opt;
    std::map<std::string, std::string> pos;
    std::vector<std::string>           rest;

    CLI::App app{"Exact computations in the bicyclic monoid", "bicyclic"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", opt.cap, "largest accepted exponent");

    auto table = commands();
    std::map<CLI::App*, Command const*> by_app;
    for (auto const& cmd : table) {
      auto* sub = app.add_subcommand(cmd.name, cmd.help);
      for (auto const& name : cmd.required) {
        sub->add_option(name, pos[name])->required();
      }
      for (auto const& name : cmd.optional) {
        sub->add_option(name, pos[name]);
      }
      if (cmd.variadic) {
        sub->add_option("gens", rest)->required();
      }
      for (auto const& flag : cmd.flags) {
        add_flag(sub, flag, opt);
      }
      by_app[sub] = &cmd;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kExitOk;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }

    Command const* chosen = nullptr;
    for (auto* sub : app.get_subcommands()) {
      chosen = by_app.at(sub);
    }
    Context ctx{opt, pos, rest, out, chosen->name};
    try {
      return chosen->handler(ctx);
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
    } catch (std::domain_error const& e) {
      err << "error: " << e.what() << '\n';
    } catch (std::overflow_error const& e) {
      err << "error: " << e.what() << '\n';
    } catch (std::length_error const& e) {
      err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
  }

}  // namespace bicyclic::cli
