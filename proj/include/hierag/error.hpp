#pragma once

#include <stdexcept>
#include <string>

namespace hierag {

enum class Errc {
    PathNotFound,
    NotADirectory,
    IoError,
    ArgError,
    AuthError,
    RateLimited,
    BackendUnreachable,
    MalformedResponse,
    TemplateError,
    MissingChildDoc,
    DuplicateDocId,
    DimensionMismatch,
    EmptyReference,
    MissingAnswer,
    DatasetError,
    NoIndex,
};

// Machine-parsable code, printed by the CLI on stderr as "<code>: <message>".
inline const char* errc_code(Errc c) {
    switch (c) {
    case Errc::PathNotFound: return "E_PATH";
    case Errc::NotADirectory: return "E_PATH";
    case Errc::IoError: return "E_IO";
    case Errc::ArgError: return "E_ARG";
    case Errc::AuthError: return "E_AUTH";
    case Errc::RateLimited: return "E_RATELIMIT";
    case Errc::BackendUnreachable: return "E_BACKEND";
    case Errc::MalformedResponse: return "E_RESPONSE";
    case Errc::TemplateError: return "E_TEMPLATE";
    case Errc::MissingChildDoc: return "E_ORDER";
    case Errc::DuplicateDocId: return "E_DUPID";
    case Errc::DimensionMismatch: return "E_DIM";
    case Errc::EmptyReference: return "E_METRIC";
    case Errc::MissingAnswer: return "E_DATASET";
    case Errc::DatasetError: return "E_DATASET";
    case Errc::NoIndex: return "E_NOINDEX";
    }
    return "E_UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }
    const char* code_string() const { return errc_code(code_); }

private:
    Errc code_;
};

} // namespace hierag
