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

#include "elgot/dsl.hpp"

#include <cctype>
#include <sstream>

namespace elgot {

namespace {

struct Token {
    enum class Kind { Word, Number, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    std::uint64_t number = 0;
    std::size_t line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(tok_.line, tok_.col, msg);
    }

    Token expect_word(const std::string& what) {
        if (tok_.kind != Token::Kind::Word) fail("expected " + what);
        return next();
    }

    Token expect_number(const std::string& what) {
        if (tok_.kind != Token::Kind::Number) fail("expected " + what);
        return next();
    }

    void expect_punct(const std::string& p) {
        if (tok_.kind != Token::Kind::Punct || tok_.text != p) fail("expected '" + p + "'");
        advance();
    }

    bool try_punct(const std::string& p) {
        if (tok_.kind == Token::Kind::Punct && tok_.text == p) {
            advance();
            return true;
        }
        return false;
    }

    bool try_word(const std::string& w) {
        if (tok_.kind == Token::Kind::Word && tok_.text == w) {
            advance();
            return true;
        }
        return false;
    }

    bool at_end() const { return tok_.kind == Token::Kind::End; }

private:
    void advance() {
        skip_trivia();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::End;
            tok_.text.clear();
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '\''))
                step();
            tok_.kind = Token::Kind::Word;
            tok_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                step();
            tok_.kind = Token::Kind::Number;
            tok_.text = text_.substr(start, pos_ - start);
            tok_.number = std::stoull(tok_.text);
            return;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            tok_.kind = Token::Kind::Punct;
            tok_.text = "->";
            step();
            step();
            return;
        }
        tok_.kind = Token::Kind::Punct;
        tok_.text = std::string(1, c);
        step();
    }

    void skip_trivia() {
        for (;;) {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                step();
            if (pos_ < text_.size() && text_[pos_] == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') step();
                continue;
            }
            break;
        }
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
    Token tok_;
};

std::vector<std::string> parse_name_set(Lexer& lx) {
    lx.expect_punct("{");
    std::vector<std::string> names;
    if (lx.try_punct("}")) return names;
    for (;;) {
        const Token& p = lx.peek();
        if (p.kind != Token::Kind::Word && p.kind != Token::Kind::Number)
            lx.fail("expected a name");
        names.push_back(lx.next().text);
        if (lx.try_punct(",")) continue;
        lx.expect_punct("}");
        return names;
    }
}

// carrier element: {p,q} | (2,x) | x
Val parse_element(Lexer& lx, VarietyId v, const FinSet& gens) {
    auto gen_index = [&](const Token& t) -> std::uint64_t {
        std::size_t i = gens.index_of(t.text);
        if (i == FinSet::npos)
            throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
        return i;
    };
    if (lx.peek().kind == Token::Kind::Punct && lx.peek().text == "{") {
        if (v != VarietyId::Jsl) lx.fail("set elements need the jsl variety");
        lx.expect_punct("{");
        std::vector<Val> items;
        if (!lx.try_punct("}")) {
            for (;;) {
                Token t = lx.expect_word("a generator");
                items.push_back(atom(gen_index(t)));
                if (lx.try_punct(",")) continue;
                lx.expect_punct("}");
                break;
            }
        }
        return tbox(v, 0, std::move(items));
    }
    if (lx.try_punct("(")) {
        if (v != VarietyId::Unary) lx.fail("counter elements need the unary variety");
        Token n = lx.expect_number("a counter");
        lx.expect_punct(",");
        Token g = lx.expect_word("a generator");
        lx.expect_punct(")");
        return tbox(v, n.number, {atom(gen_index(g))});
    }
    Token g = lx.expect_word("a generator");
    return eta(v, atom(gen_index(g)));
}

// the body of F[...]: "+n x" (Id shape) or "out L [via] a:{..} b:{..}"
Val parse_fnode(Lexer& lx, const Instance& inst, const FinSet& gens) {
    if (inst.shape.is_id()) {
        lx.expect_punct("+");
        Token n = lx.expect_number("an increment");
        Token g = lx.expect_word("a generator");
        std::size_t i = gens.index_of(g.text);
        if (i == FinSet::npos)
            throw ParseError(g.line, g.col, "unknown generator '" + g.text + "'");
        return node(0, {tbox(inst.variety, n.number, {atom(i)})});
    }
    if (!inst.shape.is_moore()) lx.fail("only Moore and Id steps have a text form");
    const MooreShape& ms = inst.shape.moore();
    if (!lx.try_word("out")) lx.fail("expected 'out'");
    const Token& labtok = lx.peek();
    if (labtok.kind != Token::Kind::Word && labtok.kind != Token::Kind::Number)
        lx.fail("expected an output label");
    Token lab = lx.next();
    std::size_t label = 0;
    for (; label < ms.outputs->size(); ++label)
        if (ms.outputs->names[label] == lab.text) break;
    if (label == ms.outputs->size())
        throw ParseError(lab.line, lab.col, "unknown output '" + lab.text + "'");

    std::vector<Val> children(ms.alphabet->size());
    std::vector<bool> seen(ms.alphabet->size(), false);
    (void)lx.try_word("via");
    (void)lx.try_punct(";");
    while (lx.peek().kind == Token::Kind::Word &&
           ms.alphabet->index_of(lx.peek().text) != FinSet::npos) {
        Token sym = lx.next();
        std::size_t s = ms.alphabet->index_of(sym.text);
        lx.expect_punct(":");
        children[s] = parse_element(lx, inst.variety, gens);
        seen[s] = true;
    }
    for (std::size_t s = 0; s < seen.size(); ++s) {
        if (!seen[s]) {
            if (inst.variety != VarietyId::Jsl)
                lx.fail("missing successor for symbol " + ms.alphabet->name(s));
            children[s] = tbox(VarietyId::Jsl, 0, {});
        }
    }
    return node(label, std::move(children));
}

// Collects the tokens of one block line (starting after '->' or '=') as a
// source snippet. A line ends at ';', at the closing '}' of the block, or
// at the start of the next input line (bracket-balanced).
std::string capture_line(Lexer& lx, std::size_t start_line) {
    std::ostringstream snippet;
    int depth = 0;
    for (;;) {
        const Token& t = lx.peek();
        if (t.kind == Token::Kind::End) break;
        if (depth == 0 && t.kind == Token::Kind::Punct && t.text == ";") {
            lx.next();
            break;
        }
        if (depth == 0 && t.kind == Token::Kind::Punct && t.text == "}") break;
        if (depth == 0 && t.line > start_line && !snippet.str().empty()) break;
        if (t.kind == Token::Kind::Punct && (t.text == "{" || t.text == "(" || t.text == "["))
            ++depth;
        if (t.kind == Token::Kind::Punct && (t.text == "}" || t.text == ")" || t.text == "]"))
            --depth;
        Token taken = lx.next();
        snippet << taken.text << " ";
    }
    return snippet.str();
}

struct HeaderState {
    std::optional<VarietyId> variety;
    std::optional<Shape> shape;
    std::string backend;
};

Instance header_instance(const HeaderState& h, std::size_t line) {
    if (!h.variety) throw ParseError(line, 1, "missing 'variety' line");
    if (!h.shape) throw ParseError(line, 1, "missing 'shape' line");
    return make_instance(*h.variety, *h.shape);
}

}  // namespace

const CoalgPtr& Workspace::coalg(const std::string& name) const {
    auto it = coalgebras.find(name);
    if (it == coalgebras.end())
        throw Error(ErrorKind::InvalidArgument, "unknown coalgebra '" + name + "'");
    return it->second;
}

const FfgEquation& Workspace::equation(const std::string& name) const {
    auto it = equations.find(name);
    if (it == equations.end())
        throw Error(ErrorKind::InvalidArgument, "unknown equation '" + name + "'");
    return it->second;
}

Workspace parse_workspace(const std::string& text) {
    Lexer lx(text);
    HeaderState header;
    std::optional<Instance> inst;
    Workspace ws;

    auto ensure_instance = [&](const Token& at) {
        if (inst) return;
        inst = header_instance(header, at.line);
        ws.inst = *inst;
        if (header.backend == "stream") {
            if (inst->variety != VarietyId::Unary || !inst->shape.is_id())
                throw ParseError(at.line, at.col, "the stream backend needs 'variety unary' and 'shape id'");
            ws.backend = stream_backend();
        } else if (header.backend == "bisim") {
            ws.backend = bisim_backend(*inst);
        } else if (!header.backend.empty()) {
            throw ParseError(at.line, at.col, "unknown backend '" + header.backend + "'");
        }
    };

    while (!lx.at_end()) {
        Token kw = lx.expect_word("a statement");
        if (kw.text == "variety") {
            header.variety = variety_from_string(lx.expect_word("a variety").text);
        } else if (kw.text == "shape") {
            Token s = lx.expect_word("a shape");
            if (s.text == "id") {
                header.shape = id_shape();
            } else if (s.text == "moore") {
                if (!lx.try_word("outputs")) lx.fail("expected 'outputs'");
                std::vector<std::string> outs = parse_name_set(lx);
                if (!lx.try_word("alphabet")) lx.fail("expected 'alphabet'");
                std::vector<std::string> alpha = parse_name_set(lx);
                LabelSetPtr labels;
                if (outs == std::vector<std::string>{"0", "1"})
                    labels = bool_labels();
                else if (header.variety && *header.variety == VarietyId::Jsl)
                    throw ParseError(s.line, s.col,
                                     "jsl Moore outputs must be the semilattice {0,1}");
                else
                    labels = plain_labels(std::move(outs));
                header.shape = moore_shape(labels, make_finset(std::move(alpha)));
            } else if (s.text == "poly") {
                std::vector<std::pair<std::string, std::uint32_t>> ops;
                lx.expect_punct("{");
                if (!lx.try_punct("}")) {
                    for (;;) {
                        Token sym = lx.expect_word("an operation symbol");
                        lx.expect_punct(":");
                        Token ar = lx.expect_number("an arity");
                        ops.emplace_back(sym.text, static_cast<std::uint32_t>(ar.number));
                        if (lx.try_punct(",")) continue;
                        lx.expect_punct("}");
                        break;
                    }
                }
                header.shape = poly_shape(std::move(ops));
            } else {
                throw ParseError(s.line, s.col, "unknown shape '" + s.text + "'");
            }
        } else if (kw.text == "backend") {
            header.backend = lx.expect_word("a backend").text;
        } else if (kw.text == "coalg") {
            ensure_instance(kw);
            Token name = lx.expect_word("a coalgebra name");
            lx.expect_punct("{");
            std::vector<std::string> gen_names;
            std::vector<std::pair<Token, std::string>> lines;
            while (!lx.try_punct("}")) {
                Token gen = lx.expect_word("a generator name");
                gen_names.push_back(gen.text);
                lx.expect_punct("->");
                lines.emplace_back(gen, capture_line(lx, gen.line));
            }
            FinSetPtr gens = make_finset(gen_names);
            std::vector<Val> steps;
            steps.reserve(lines.size());
            for (const auto& [at, src] : lines) {
                try {
                    Lexer sub(src);
                    Val bval = parse_fnode(sub, *inst, *gens);
                    if (!sub.at_end()) sub.fail("trailing input in step");
                    steps.push_back(std::move(bval));
                } catch (const ParseError& err) {
                    throw ParseError(at.line, at.col, err.reason());
                } catch (const Error& err) {
                    throw ParseError(at.line, at.col, err.what());
                }
            }
            ws.coalgebras[name.text] =
                make_ffg_coalgebra(*inst, gens, std::move(steps), name.text);
        } else if (kw.text == "param") {
            ensure_instance(kw);
            Token name = lx.expect_word("a parameter name");
            lx.expect_punct("=");
            if (lx.try_word("class")) {
                if (!ws.backend)
                    throw ParseError(kw.line, kw.col, "class parameters need a backend line");
                Token cname = lx.expect_word("a coalgebra name");
                const CoalgPtr& c = ws.coalg(cname.text);
                Val elem = parse_element(lx, inst->variety, *c->gens);
                ws.params[name.text] = ws.backend->class_of(c, elem);
            } else if (lx.try_word("stream")) {
                std::ostringstream lit;
                while (!lx.at_end()) {
                    Token t = lx.next();
                    lit << t.text;
                    if (t.kind == Token::Kind::Word && (t.text == "w" || t.text == "W")) break;
                }
                EpStream s = parse_epstream(lit.str());
                ws.params[name.text] = realize_rational(s.mean());
            } else {
                lx.fail("expected 'class' or 'stream'");
            }
        } else if (kw.text == "equation") {
            ensure_instance(kw);
            if (!ws.backend)
                throw ParseError(kw.line, kw.col, "equations need a backend line");
            Token name = lx.expect_word("an equation name");
            lx.expect_punct("{");
            std::vector<std::string> var_names;
            std::vector<std::pair<Token, std::string>> lines;
            while (!lx.try_punct("}")) {
                Token var = lx.expect_word("a variable name");
                var_names.push_back(var.text);
                lx.expect_punct("=");
                lines.emplace_back(var, capture_line(lx, var.line));
            }
            FinSetPtr vars = make_finset(var_names);
            AlgebraPtr carrier = free_algebra(inst->variety, vars);
            AlgebraPtr params = ws.backend->algebra();
            Coproduct target = coproduct(bnode_algebra(*inst, carrier), params);

            auto lookup_param = [&](const Token& p) -> const Val& {
                auto it = ws.params.find(p.text);
                if (it == ws.params.end())
                    throw ParseError(p.line, p.col, "unknown parameter '" + p.text + "'");
                return it->second;
            };

            std::vector<Val> steps;
            for (const auto& [at, src] : lines) {
                try {
                    Lexer sub(src);
                    std::optional<Val> bval;
                    std::optional<Val> pval;
                    if (sub.try_word("F")) {
                        sub.expect_punct("[");
                        bval = parse_fnode(sub, *inst, *vars);
                        sub.expect_punct("]");
                        if (sub.try_punct("+")) {
                            if (!sub.try_word("param")) sub.fail("expected 'param'");
                            pval = lookup_param(sub.expect_word("a parameter name"));
                        }
                    } else if (sub.try_word("param")) {
                        pval = lookup_param(sub.expect_word("a parameter name"));
                    } else if (sub.try_word("eff")) {
                        sub.expect_punct("{");
                        Token n = sub.expect_number("a counter");
                        sub.expect_punct("}");
                        sub.expect_punct("(");
                        std::vector<Val> items;
                        for (;;) {
                            if (sub.try_word("next")) {
                                if (!inst->shape.is_id())
                                    sub.fail("'next' needs the id shape; use a full node");
                                Token g = sub.expect_word("a variable");
                                std::size_t gi = vars->index_of(g.text);
                                if (gi == FinSet::npos)
                                    throw ParseError(g.line, g.col,
                                                     "unknown variable '" + g.text + "'");
                                items.push_back(eff_next(node(0, {atom(gi)})));
                            } else if (sub.try_word("param")) {
                                items.push_back(
                                    eff_param(lookup_param(sub.expect_word("a parameter name"))));
                            } else {
                                sub.fail("expected 'next' or 'param'");
                            }
                            if (sub.try_punct(",")) continue;
                            sub.expect_punct(")");
                            break;
                        }
                        Val raw = tbox(inst->variety, n.number, std::move(items));
                        std::vector<Val> fitems, aitems;
                        for (const Val& item : raw.kids)
                            (item.tag == 0 ? fitems : aitems).push_back(item.kids.at(0));
                        if (inst->variety == VarietyId::Jsl) {
                            bval = inst->law.apply(tbox(VarietyId::Jsl, 0, std::move(fitems)));
                            pval = params->alpha(tbox(VarietyId::Jsl, 0, std::move(aitems)));
                        } else if (!fitems.empty()) {
                            bval = inst->law.apply(tbox(inst->variety, raw.tag, {fitems[0]}));
                        } else {
                            pval = params->alpha(tbox(inst->variety, raw.tag, {aitems[0]}));
                        }
                    } else {
                        sub.fail("expected 'F[', 'param' or 'eff'");
                    }
                    if (!sub.at_end()) sub.fail("trailing input in equation line");
                    if (inst->variety == VarietyId::Jsl) {
                        Val left = bval ? *bval : lift_apply(inst->law, carrier)->bottom();
                        Val right = pval ? *pval : params->bottom();
                        steps.push_back(pair(std::move(left), std::move(right)));
                    } else if (bval) {
                        steps.push_back(target.inl(*bval));
                    } else {
                        steps.push_back(target.inr(*pval));
                    }
                } catch (const ParseError& err) {
                    throw ParseError(at.line, at.col, err.reason());
                } catch (const Error& err) {
                    throw ParseError(at.line, at.col, err.what());
                }
            }
            ws.equations[name.text] = make_equation(*inst, vars, params, std::move(steps));
        } else {
            throw ParseError(kw.line, kw.col, "unknown statement '" + kw.text + "'");
        }
    }
    if (!inst) {
        inst = header_instance(header, 1);
        ws.inst = *inst;
        if (header.backend == "stream")
            ws.backend = stream_backend();
        else if (header.backend == "bisim")
            ws.backend = bisim_backend(*inst);
    }
    return ws;
}

StateRef parse_state_ref(const Workspace& ws, const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorKind::InvalidArgument, "state reference must be 'coalg:element'");
    StateRef ref;
    ref.coalg = ws.coalg(text.substr(0, colon));
    std::string elem = text.substr(colon + 1);
    Lexer lx(elem);
    ref.element = parse_element(lx, ws.inst.variety, *ref.coalg->gens);
    if (!lx.at_end()) lx.fail("trailing input in state reference");
    return ref;
}

std::string element_str(VarietyId v, const Val& t, const FinSet& gens) {
    std::ostringstream os;
    switch (v) {
        case VarietyId::Set:
            os << gens.name(static_cast<std::size_t>(t.kids.at(0).tag));
            break;
        case VarietyId::Unary:
            os << "(" << t.tag << "," << gens.name(static_cast<std::size_t>(t.kids.at(0).tag))
               << ")";
            break;
        case VarietyId::Jsl: {
            os << "{";
            for (std::size_t i = 0; i < t.kids.size(); ++i) {
                if (i) os << ",";
                os << gens.name(static_cast<std::size_t>(t.kids[i].tag));
            }
            os << "}";
            break;
        }
    }
    return os.str();
}

}  // namespace elgot
