/*
 * Copyright 2026 the elgot project contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "elgot/dsl.hpp"
#include "elgot/enumerate.hpp"
#include "elgot/serialize.hpp"

using namespace elgot;

namespace {

constexpr int kExitInequivalent = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Workspace load(const std::string& path) { return parse_workspace(slurp(path)); }

BackendPtr need_backend(const Workspace& ws) {
    if (!ws.backend)
        throw Error(ErrorKind::UnsupportedInstance, "the input file declares no backend");
    return ws.backend;
}

// one named item, or the only item of the map
template <typename M>
const typename M::mapped_type& pick(const M& m, std::string name, const char* what) {
    if (name.empty()) {
        if (m.size() != 1)
            throw Error(ErrorKind::InvalidArgument,
                        std::string("choose a ") + what + " with --" + what);
        return m.begin()->second;
    }
    auto it = m.find(name);
    if (it == m.end())
        throw Error(ErrorKind::InvalidArgument, std::string("unknown ") + what + " " + name);
    return it->second;
}

int run_equiv(const std::vector<std::string>& streams, const std::string& file,
              const std::vector<std::string>& states, const std::string& format) {
    if (streams.size() == 2) {
        EpStream s = parse_epstream(streams[0]);
        EpStream t = parse_epstream(streams[1]);
        bool eq = ep_equiv(s, t);
        if (format == "json") {
            std::cout << Json{{"left", s.mean().str()},
                              {"right", t.mean().str()},
                              {"equivalent", eq}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "mean " << s.mean().str() << (eq ? " = " : " != ") << "mean "
                      << t.mean().str() << "\n";
        }
        return eq ? 0 : kExitInequivalent;
    }
    if (states.size() != 2 || file.empty())
        throw Error(ErrorKind::InvalidArgument,
                    "equiv needs either two --stream literals or a file and two --state refs");
    Workspace ws = load(file);
    StateRef a = parse_state_ref(ws, states[0]);
    StateRef b = parse_state_ref(ws, states[1]);
    bool eq;
    if (ws.inst.variety == VarietyId::Unary) {
        EpStream s = stream_of(*a.coalg, a.element);
        EpStream t = stream_of(*b.coalg, b.element);
        eq = ep_equiv(s, t);
        std::cout << "mean " << s.mean().str() << (eq ? " = " : " != ") << "mean "
                  << t.mean().str() << "\n";
    } else {
        eq = behavioral_equiv(a.coalg, a.element, b.coalg, b.element);
        std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    }
    return eq ? 0 : kExitInequivalent;
}

int run_determinize(const std::string& file, const std::string& coalg_name,
                    const std::string& format) {
    Workspace ws = load(file);
    const CoalgPtr& c = pick(ws.coalgebras, coalg_name, "coalg");
    if (format == "json") {
        std::cout << coalg_to_json(*c).dump(2) << "\n";
        return 0;
    }
    MaterializeOptions opts;
    opts.reachable_only = false;
    if (c->inst.variety == VarietyId::Unary) {
        // infinite carrier: print the generator table instead
        if (format == "dot") {
            std::cout << coalg_dot(*c);
            return 0;
        }
        for (std::size_t i = 0; i < c->gens->size(); ++i)
            std::cout << c->gens->name(i) << " -> " << show(c->step[i], c->gens.get()) << "\n";
        return 0;
    }
    Machine m = materialize(*c, opts);
    if (format == "dot") {
        std::cout << machine_dot(m, c->inst, c->name);
        return 0;
    }
    for (std::size_t s = 0; s < m.size(); ++s) {
        std::cout << element_str(c->inst.variety, m.states[s], *c->gens) << " -> out "
                  << m.label[s];
        for (std::size_t a = 0; a < m.next[s].size(); ++a) {
            std::cout << (a == 0 ? " via " : " ");
            if (c->inst.shape.is_moore())
                std::cout << c->inst.shape.moore().alphabet->name(a) << ":";
            std::cout << element_str(c->inst.variety, m.states[m.next[s][a]], *c->gens);
        }
        std::cout << "\n";
    }
    return 0;
}

int run_solve(const std::string& file, const std::string& eq_name, const std::string& format) {
    Workspace ws = load(file);
    BackendPtr backend = need_backend(ws);
    const FfgEquation& e = pick(ws.equations, eq_name, "equation");
    Solution s = solve_in_phi(backend, e);
    if (format == "json") {
        std::cout << solution_to_json(s, backend).dump(2) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < e.vars->size(); ++i)
        std::cout << e.vars->name(i) << " = " << backend->key_str(s.assignment[i]) << "\n";
    return 0;
}

int run_zigzag(const std::string& file, const std::vector<std::string>& states,
               const std::string& format) {
    Workspace ws = load(file);
    if (ws.inst.variety != VarietyId::Unary || !ws.inst.shape.is_id())
        throw Error(ErrorKind::UnsupportedInstance, "zigzag needs the unary/id instance");
    if (states.size() != 2)
        throw Error(ErrorKind::InvalidArgument, "zigzag needs two --state refs");
    StateRef a = parse_state_ref(ws, states[0]);
    StateRef b = parse_state_ref(ws, states[1]);
    auto w = zigzag_witness(a.coalg, a.element, b.coalg, b.element);
    if (!w) {
        std::cout << "NotEquivalent: mean " << stream_of(*a.coalg, a.element).mean().str()
                  << " != mean " << stream_of(*b.coalg, b.element).mean().str() << "\n";
        return kExitInequivalent;
    }
    if (format == "dot") {
        // the span: middle coalgebra with both leg images per generator
        std::ostringstream os;
        os << "digraph zigzag {\n  rankdir=LR;\n";
        for (std::size_t i = 0; i < w->mid->gens->size(); ++i) {
            os << "  z" << i << " [label=\"" << w->mid->gens->name(i) << "\\ng: "
               << element_str(VarietyId::Unary, w->to_left.gen_map[i], *a.coalg->gens)
               << "\\nh: "
               << element_str(VarietyId::Unary, w->to_right.gen_map[i], *b.coalg->gens)
               << "\"];\n";
        }
        for (std::size_t i = 0; i < w->mid->gens->size(); ++i) {
            const Val& child = w->mid->step[i].kids.at(0);
            os << "  z" << i << " -> z" << child.kids.at(0).tag << " [label=\"+"
               << child.tag << "\"];\n";
        }
        os << "}\n";
        std::cout << os.str();
        return 0;
    }
    std::cout << "witness on " << w->mid->gens->size() << " generators\n";
    for (std::size_t i = 0; i < w->mid->gens->size(); ++i) {
        std::cout << "  " << w->mid->gens->name(i) << " -> "
                  << show(w->mid->step[i], w->mid->gens.get()) << "   g:"
                  << element_str(VarietyId::Unary, w->to_left.gen_map[i], *a.coalg->gens)
                  << " h:"
                  << element_str(VarietyId::Unary, w->to_right.gen_map[i], *b.coalg->gens)
                  << "\n";
    }
    return 0;
}

int run_language(const std::string& file, const std::string& state, std::size_t maxlen,
                 const std::string& format) {
    Workspace ws = load(file);
    BackendPtr backend = need_backend(ws);
    StateRef ref = parse_state_ref(ws, state);
    Val cls = backend->class_of(ref.coalg, ref.element);
    Language lang = language_of(backend, cls);
    if (format == "dot") {
        std::cout << machine_dot(lang.machine, ws.inst, "minimal");
        return 0;
    }
    const FinSet& alphabet = *ws.inst.shape.moore().alphabet;
    std::vector<std::vector<std::uint32_t>> frontier = {{}};
    for (std::size_t len = 0; len <= maxlen; ++len) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& word : frontier) {
            if (word.size() == len) {
                if (lang.member(word)) {
                    if (word.empty()) {
                        std::cout << "-\n";
                    } else {
                        for (auto sym : word) std::cout << alphabet.name(sym);
                        std::cout << "\n";
                    }
                }
                for (std::uint32_t a = 0; a < alphabet.size(); ++a) {
                    auto w = word;
                    w.push_back(a);
                    next.push_back(std::move(w));
                }
            }
        }
        frontier = std::move(next);
    }
    std::cout << "minimal machine: " << lang.machine.size() << " states\n";
    return 0;
}

struct LawsConfig {
    std::string axiom = "all";
    std::string backend = "stream";
    std::size_t bound = 2;
    std::uint64_t seed = 42;
    std::string format = "text";
};

Instance laws_instance(const LawsConfig& cfg) {
    if (cfg.backend == "stream") return make_instance(VarietyId::Unary, id_shape());
    return make_instance(VarietyId::Jsl, moore_shape(bool_labels(), make_finset({"a"})));
}

BackendPtr laws_backend(const LawsConfig& cfg) {
    if (cfg.backend == "stream") return stream_backend();
    if (cfg.backend == "bisim") return bisim_backend(laws_instance(cfg));
    throw Error(ErrorKind::UnsupportedInstance, "unknown backend " + cfg.backend);
}

HarnessReport run_distlaw_axiom(const LawsConfig& cfg) {
    LawBounds lb;
    lb.max_gens = cfg.bound;
    lb.max_counter = std::max<std::uint64_t>(2, cfg.bound);
    lb.max_subset = 2;
    HarnessReport rep = builtin_laws_report(lb);
    rep.seed = cfg.seed;
    return rep;
}

HarnessReport run_combinator_axiom(const LawsConfig& cfg) {
    return combinator_laws_report(500, cfg.seed, cfg.bound);
}

HarnessReport run_solution_axiom(const LawsConfig& cfg) {
    return solution_square_report(laws_backend(cfg), 200, cfg.seed, cfg.bound);
}

HarnessReport run_axiom_harness(const LawsConfig& cfg, const std::string& which) {
    BackendPtr backend = laws_backend(cfg);
    ElgotAlgebra alg = backend_elgot(backend);
    HarnessBounds hb;
    hb.max_vars = std::max<std::size_t>(1, std::min<std::size_t>(cfg.bound, 2));
    hb.max_params = 1;
    hb.max_counter = 1;
    std::vector<Val> pool = default_param_pool(backend);
    HarnessReport rep = which == "weak-functoriality"
                            ? check_weak_functoriality(alg, hb, pool)
                            : check_compositionality(alg, hb, pool);
    rep.seed = cfg.seed;
    return rep;
}

int run_laws(const LawsConfig& cfg) {
    std::vector<HarnessReport> reports;
    auto want = [&](const std::string& ax) { return cfg.axiom == "all" || cfg.axiom == ax; };
    if (want("distlaw")) reports.push_back(run_distlaw_axiom(cfg));
    if (want("combinators")) reports.push_back(run_combinator_axiom(cfg));
    if (want("solution")) reports.push_back(run_solution_axiom(cfg));
    if (want("weak-functoriality")) reports.push_back(run_axiom_harness(cfg, "weak-functoriality"));
    if (want("compositionality")) reports.push_back(run_axiom_harness(cfg, "compositionality"));
    if (reports.empty())
        throw Error(ErrorKind::InvalidArgument, "unknown axiom " + cfg.axiom);

    bool ok = true;
    if (cfg.format == "json") {
        Json out = Json::array();
        for (const HarnessReport& r : reports) out.push_back(report_to_json(r));
        std::cout << out.dump(2) << "\n";
        for (const HarnessReport& r : reports) ok &= r.ok();
    } else {
        for (const HarnessReport& r : reports) {
            std::cout << (r.ok() ? "pass" : "FAIL") << "  " << r.axiom << "  ("
                      << r.instances << " instances, seed " << r.seed << ")\n";
            for (const std::string& f : r.failures) std::cout << "      " << f << "\n";
            ok &= r.ok();
        }
    }
    return ok ? 0 : kExitInequivalent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"effectful iterative equations: determinize, solve, compare"};
    app.require_subcommand(1);

    std::string file, coalg_name, eq_name, state_one, format = "text";
    std::vector<std::string> streams, states;
    std::size_t maxlen = 6;
    LawsConfig laws;

    auto add_format = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", format, "output format: " + choices)
            ->default_val("text");
    };

    CLI::App* equiv = app.add_subcommand("equiv", "decide equivalence of streams or states");
    equiv->add_option("file", file, "workspace file");
    equiv->add_option("--stream", streams, "stream literal, e.g. (1,2)(3)^w");
    equiv->add_option("--state", states, "state reference, e.g. C:{p} or C:(0,x)");
    add_format(equiv, "text|json");

    CLI::App* det = app.add_subcommand("determinize", "materialize the carrier machine");
    det->add_option("file", file, "workspace file")->required();
    det->add_option("--coalg", coalg_name, "coalgebra name");
    add_format(det, "text|dot|json");

    CLI::App* solve = app.add_subcommand("solve", "solve an equation in the backend");
    solve->add_option("file", file, "workspace file")->required();
    solve->add_option("--equation", eq_name, "equation name");
    add_format(solve, "text|json");

    CLI::App* zig = app.add_subcommand("zigzag", "connect two equivalent stream states");
    zig->add_option("file", file, "workspace file")->required();
    zig->add_option("--state", states, "two state references");
    add_format(zig, "text|dot");

    CLI::App* lawscmd = app.add_subcommand("laws", "run the law and axiom harness");
    lawscmd->add_option("--axiom", laws.axiom,
                        "distlaw|combinators|solution|weak-functoriality|compositionality|all");
    lawscmd->add_option("--backend", laws.backend, "stream|bisim");
    lawscmd->add_option("--bound", laws.bound, "size bound for enumerations");
    lawscmd->add_option("--seed", laws.seed, "seed for randomized laws");
    lawscmd->add_option("--format", laws.format, "text|json");

    CLI::App* lang = app.add_subcommand("language", "enumerate the language of a class");
    lang->add_option("file", file, "workspace file")->required();
    lang->add_option("--state", state_one, "state reference")->required();
    lang->add_option("--maxlen", maxlen, "maximum word length");
    add_format(lang, "text|dot");

    CLI11_PARSE(app, argc, argv);

    try {
        if (equiv->parsed()) return run_equiv(streams, file, states, format);
        if (det->parsed()) return run_determinize(file, coalg_name, format);
        if (solve->parsed()) return run_solve(file, eq_name, format);
        if (zig->parsed()) return run_zigzag(file, states, format);
        if (lawscmd->parsed()) return run_laws(laws);
        if (lang->parsed()) return run_language(file, state_one, maxlen, format);
    } catch (const ParseError& err) {
        std::cerr << err.what() << "\n";
        return kExitParse;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitUnsupported;
    }
    return 0;
}
