#pragma once

#include <stdexcept>
#include <string>

namespace fdist {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnweightedTerm : Error {
    explicit UnweightedTerm(const std::string& what) : Error(what) {}
};

struct DegreeOverflow : Error {
    explicit DegreeOverflow(const std::string& what) : Error(what) {}
};

struct SignatureMismatch : Error {
    explicit SignatureMismatch(const std::string& what) : Error(what) {}
};

struct WindowUnderflow : Error {
    explicit WindowUnderflow(const std::string& what) : Error(what) {}
};

struct ReductionBudgetExceeded : Error {
    explicit ReductionBudgetExceeded(const std::string& what) : Error(what) {}
};

struct NotLocal : Error {
    explicit NotLocal(const std::string& what) : Error(what) {}
};

struct ModelError : Error {
    explicit ModelError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace fdist
