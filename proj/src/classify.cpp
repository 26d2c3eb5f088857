#include "gaze/classify.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace gaze {

namespace {

enum class Kind { identifier, keyword, number, text_literal, punct };

struct RawTok {
    std::string text;
    Kind kind = Kind::punct;
    int line = 1;
    int col = 0;  // 0-based column of first character
};

const std::set<std::string>& keywords() {
    static const std::set<std::string> kw = {
        "if",    "else",      "switch",   "case",    "default",  "while",  "for",
        "do",    "int",       "long",     "short",   "byte",     "char",   "boolean",
        "float", "double",    "void",     "var",     "public",   "private","protected",
        "static","final",     "abstract", "return",  "new",      "break",  "continue",
        "null",  "true",      "false",    "class",   "this",     "throw",  "throws",
        "try",   "catch",     "finally",  "synchronized",
    };
    return kw;
}

bool is_type_keyword(const std::string& s) {
    static const std::set<std::string> ty = {"int",    "long",  "short",  "byte", "char",
                                             "boolean","float", "double", "void", "var"};
    return ty.count(s) > 0;
}

bool is_modifier(const std::string& s) {
    static const std::set<std::string> mods = {"public", "private",  "protected", "static",
                                               "final",  "abstract", "synchronized"};
    return mods.count(s) > 0;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }

std::vector<RawTok> lex(const std::string& src) {
    std::vector<RawTok> toks;
    int line = 1, col = 0;
    std::size_t i = 0;
    const std::size_t n = src.size();

    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 0;
        } else {
            ++col;
        }
    };

    while (i < n) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            advance(c);
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            while (i < n && src[i] != '\n') { advance(src[i]); ++i; }
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            const int l0 = line, c0 = col;
            advance(src[i]); ++i;
            advance(src[i]); ++i;
            bool closed = false;
            while (i < n) {
                if (src[i] == '*' && i + 1 < n && src[i + 1] == '/') {
                    advance(src[i]); ++i;
                    advance(src[i]); ++i;
                    closed = true;
                    break;
                }
                advance(src[i]);
                ++i;
            }
            if (!closed) throw ParseError("unterminated block comment", l0, c0);
            continue;
        }
        RawTok t;
        t.line = line;
        t.col = col;
        if (is_ident_start(c)) {
            while (i < n && is_ident_char(src[i])) { t.text += src[i]; advance(src[i]); ++i; }
            t.kind = keywords().count(t.text) ? Kind::keyword : Kind::identifier;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < n && (is_ident_char(src[i]) || src[i] == '.')) {
                t.text += src[i]; advance(src[i]); ++i;
            }
            t.kind = Kind::number;
        } else if (c == '"' || c == '\'') {
            const char quote = c;
            t.text += c; advance(c); ++i;
            bool closed = false;
            while (i < n && src[i] != '\n') {
                if (src[i] == '\\' && i + 1 < n) {
                    t.text += src[i]; advance(src[i]); ++i;
                    t.text += src[i]; advance(src[i]); ++i;
                    continue;
                }
                if (src[i] == quote) {
                    t.text += src[i]; advance(src[i]); ++i;
                    closed = true;
                    break;
                }
                t.text += src[i]; advance(src[i]); ++i;
            }
            if (!closed) throw ParseError("unterminated literal", t.line, t.col);
            t.kind = Kind::text_literal;
        } else {
            static const char* three[] = {">>>", "<<=", ">>="};
            static const char* two[] = {"==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
                                        "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>",
                                        "->", "::"};
            static const std::string singles = "()[]{};,.<>=+-*/%!&|^~?:@";
            bool matched = false;
            for (const char* op : three) {
                if (src.compare(i, 3, op) == 0) {
                    t.text = op;
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                for (const char* op : two) {
                    if (src.compare(i, 2, op) == 0) {
                        t.text = op;
                        matched = true;
                        break;
                    }
                }
            }
            if (!matched) {
                if (singles.find(c) == std::string::npos)
                    throw ParseError(std::string("illegal character '") + c + "'", line, col);
                t.text = std::string(1, c);
            }
            for (char ch : t.text) { advance(ch); ++i; }
            t.kind = Kind::punct;
        }
        toks.push_back(t);
    }
    return toks;
}

enum class ParenKind { decl_params, call_args, control, grouping };

}  // namespace

TokenMap classify_source(const std::string& source, const LayoutModel& layout) {
    const std::vector<RawTok> toks = lex(source);
    const std::size_t n = toks.size();

    std::vector<std::string> classes(n, "other");
    std::vector<ParenKind> paren_stack;
    std::vector<RawTok> bracket_stack;  // for balance diagnostics: ( [ {
    int brace_depth = 0;

    auto is_punct = [&](std::size_t i, const char* s) {
        return i < n && toks[i].kind == Kind::punct && toks[i].text == s;
    };
    // A token that can end a type expression in this subset.
    auto type_like = [&](std::size_t i) {
        if (i >= n) return false;
        if (toks[i].kind == Kind::identifier) return true;
        if (toks[i].kind == Kind::keyword && is_type_keyword(toks[i].text)) return true;
        if (is_punct(i, "]")) return true;  // trailing [] of an array type
        return false;
    };

    for (std::size_t i = 0; i < n; ++i) {
        const RawTok& t = toks[i];
        if (t.kind == Kind::punct) {
            if (t.text == "(") {
                ParenKind pk = ParenKind::grouping;
                if (i > 0) {
                    if (classes[i - 1] == "function declaration") pk = ParenKind::decl_params;
                    else if (classes[i - 1] == "function call") pk = ParenKind::call_args;
                    else if (toks[i - 1].kind == Kind::keyword &&
                             (toks[i - 1].text == "if" || toks[i - 1].text == "while" ||
                              toks[i - 1].text == "for" || toks[i - 1].text == "switch" ||
                              toks[i - 1].text == "catch"))
                        pk = ParenKind::control;
                }
                paren_stack.push_back(pk);
                bracket_stack.push_back(t);
            } else if (t.text == "[" || t.text == "{") {
                if (t.text == "{") ++brace_depth;
                bracket_stack.push_back(t);
            } else if (t.text == ")" || t.text == "]" || t.text == "}") {
                const char open = t.text == ")" ? '(' : t.text == "]" ? '[' : '{';
                if (bracket_stack.empty() || bracket_stack.back().text[0] != open)
                    throw ParseError("unbalanced '" + t.text + "'", t.line, t.col);
                bracket_stack.pop_back();
                if (t.text == ")") paren_stack.pop_back();
                if (t.text == "}") --brace_depth;
            }
            continue;
        }
        if (t.kind == Kind::keyword) {
            if (t.text == "if" || t.text == "else" || t.text == "switch" || t.text == "case")
                classes[i] = "conditional statement";
            else if (t.text == "while" || t.text == "for" || t.text == "do")
                classes[i] = "loop";
            continue;
        }
        if (t.kind == Kind::identifier) {
            if (is_punct(i + 1, "(")) {
                // The signature of a single-function snippet sits outside any
                // braces; everything else that looks like ident( is a call.
                if (brace_depth == 0 && paren_stack.empty() && i > 0 && type_like(i - 1))
                    classes[i] = "function declaration";
                else
                    classes[i] = "function call";
                continue;
            }
            // Declaration context: a type expression preceded by a statement
            // boundary, modifier, or another type token.
            const bool prev_type = i > 0 && type_like(i - 1);
            bool prev_prev_ok = true;
            if (i >= 2) {
                const RawTok& pp = toks[i - 2];
                if (pp.kind == Kind::punct)
                    prev_prev_ok = pp.text == ";" || pp.text == "{" || pp.text == "}" ||
                                   pp.text == "(" || pp.text == "," || pp.text == "[" ||
                                   pp.text == "]";
                else if (pp.kind == Kind::keyword)
                    prev_prev_ok = is_modifier(pp.text) || is_type_keyword(pp.text);
                else
                    prev_prev_ok = false;
            }
            if (prev_type && prev_prev_ok) {
                const bool in_decl_params =
                    !paren_stack.empty() && paren_stack.back() == ParenKind::decl_params;
                if (in_decl_params &&
                    (is_punct(i + 1, ",") || is_punct(i + 1, ")") || is_punct(i + 1, "["))) {
                    classes[i] = "parameter";
                    continue;
                }
                if (!in_decl_params &&
                    (is_punct(i + 1, "=") || is_punct(i + 1, ";") || is_punct(i + 1, ",") ||
                     is_punct(i + 1, ":") || is_punct(i + 1, ")"))) {
                    classes[i] = "variable declaration";
                    continue;
                }
            }
            if (!paren_stack.empty() && paren_stack.back() == ParenKind::call_args)
                classes[i] = "argument";
            continue;
        }
        // numbers and literals
        if (!paren_stack.empty() && paren_stack.back() == ParenKind::call_args)
            classes[i] = "argument";
    }
    if (!bracket_stack.empty()) {
        const RawTok& open = bracket_stack.back();
        throw ParseError("unclosed '" + open.text + "'", open.line, open.col);
    }

    TokenMap map;
    for (std::size_t i = 0; i < n; ++i) {
        const RawTok& t = toks[i];
        AstToken tok;
        tok.id = i;
        tok.text = t.text;
        tok.semantic_class = classes[i];
        tok.line = t.line;
        const double len = static_cast<double>(t.text.size());
        tok.bbox = {t.col * layout.cell_w, (t.line - 1) * layout.cell_h,
                    (t.col + len) * layout.cell_w, t.line * layout.cell_h};
        map.tokens.push_back(tok);
    }
    map.validate();
    return map;
}

}  // namespace gaze
