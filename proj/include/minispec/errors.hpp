#pragma once

#include <stdexcept>
#include <string>

#include "minispec/span.hpp"

namespace minispec {

struct Error : std::runtime_error {
    SourceSpan span;
    Error(const SourceSpan& s, const std::string& msg)
        : std::runtime_error(s.valid() ? s.to_string() + ": " + msg : msg), span(s) {}
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed source text.
struct ParseError : Error {
    using Error::Error;
};

/// Name binding / type checking failure.
struct ResolveError : Error {
    enum class Kind { UndefinedName, TypeMismatch, DuplicateName, Other };
    Kind kind = Kind::Other;
    ResolveError(Kind k, const SourceSpan& s, const std::string& msg) : Error(s, msg), kind(k) {}
};

/// Runtime failure while executing program code or evaluating logic.
struct EvalError : Error {
    enum class Kind {
        DivisionByZero,
        Overflow,
        MissingSnapshot,
        MissingResult,
        StepBudgetExceeded,
        CalledHardwareFunction,
        NotEnumerable,   // goal outside bounded evaluation (e.g. real quantifier)
        IndexOutOfRange,
        Other,
    };
    Kind kind = Kind::Other;
    EvalError(Kind k, const SourceSpan& s, const std::string& msg) : Error(s, msg), kind(k) {}
    EvalError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

/// Concrete code reads ghost state; erasure would change behavior.
struct GhostLeakError : Error {
    using Error::Error;
};

/// Bad or insufficient DomainConfig.
struct DomainError : Error {
    enum class Kind { DomainMissing, StubMissing, BadConfig };
    Kind kind = Kind::BadConfig;
    DomainError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

/// Corpus asset inconsistent with its manifest.
struct CorpusError : Error {
    using Error::Error;
};

}  // namespace minispec
