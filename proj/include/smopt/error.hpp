#ifndef SMOPT_ERROR_HPP
#define SMOPT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace smopt {

enum class ErrorKind {
    input,     // malformed data handed to a solver or parser
    infeasible, // the requested object provably does not exist
    resource,  // a configured desk-scale bound was exceeded
    contract,  // a documented precondition was violated by the caller
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw Error(ErrorKind::input, msg); }
[[noreturn]] inline void fail_infeasible(const std::string& msg) { throw Error(ErrorKind::infeasible, msg); }
[[noreturn]] inline void fail_resource(const std::string& msg) { throw Error(ErrorKind::resource, msg); }
[[noreturn]] inline void fail_contract(const std::string& msg) { throw Error(ErrorKind::contract, msg); }

} // namespace smopt

#endif
