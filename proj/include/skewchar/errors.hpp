#pragma once

#include <stdexcept>
#include <string>

namespace skewchar {

// Every failure raised by the library derives from Error; the leaf types let
// callers (and the CLI) distinguish bad input from a failed identity check.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error { public: using Error::Error; };
class ShapeError : public Error { public: using Error::Error; };
class NotHook : public Error { public: using Error::Error; };
class SignatureMismatch : public Error { public: using Error::Error; };
class NotDivisible : public Error { public: using Error::Error; };
class MonomialMismatch : public Error { public: using Error::Error; };
class NoUniqueLeading : public Error { public: using Error::Error; };
class MalformedTuple : public Error { public: using Error::Error; };
class NotPrime : public Error { public: using Error::Error; };
class TooFewColumns : public Error { public: using Error::Error; };
class NotUnitNormalized : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };
class PoleAtRoot : public Error { public: using Error::Error; };
class ZeroSpectral : public Error { public: using Error::Error; };
class IllDefinedProduct : public Error { public: using Error::Error; };
class InvalidArgument : public Error { public: using Error::Error; };

// Raised when an identity that should hold does not.
class Mismatch : public Error { public: using Error::Error; };

}  // namespace skewchar
