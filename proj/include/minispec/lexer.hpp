#pragma once

#include <string>
#include <vector>

#include "minispec/span.hpp"

namespace minispec {

enum class TokKind {
    End,
    Ident,
    IntLit,
    RealLit,
    Keyword,
    Punct,        // operators and punctuation, text in `text`
    BackslashId,  // \old, \result, \abs, ... text without the backslash
    AnnotStart,   // start of a //@ or /*@ annotation
    AnnotEnd,     // end of an annotation
};

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    long long int_value = 0;
    double real_value = 0.0;
    SourceSpan span;

    bool is(TokKind k) const { return kind == k; }
    bool is_punct(const char* p) const { return kind == TokKind::Punct && text == p; }
    bool is_kw(const char* k) const { return kind == TokKind::Keyword && text == k; }
};

/// Tokenize a whole file. Annotation comments (`//@`, `/*@ ... @*/`) are
/// delimited with AnnotStart/AnnotEnd marker tokens; ordinary comments are
/// skipped. Throws ParseError on malformed input (bad character, unterminated
/// block comment, malformed number).
std::vector<Token> lex(const std::string& text, const std::string& file);

}  // namespace minispec
