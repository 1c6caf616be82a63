#pragma once

#include <stdexcept>
#include <string>

namespace lbo {

/// Base class of every error the library throws on bad input or exhausted
/// limits. Internal invariant failures use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LBO_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

LBO_DEFINE_ERROR(ParseError)
LBO_DEFINE_ERROR(RangeError)
LBO_DEFINE_ERROR(OrderMismatch)
LBO_DEFINE_ERROR(Unsupported)
LBO_DEFINE_ERROR(DegreeMismatch)
LBO_DEFINE_ERROR(IneligibleTable)
LBO_DEFINE_ERROR(ResourceLimit)
LBO_DEFINE_ERROR(NotAZero)
LBO_DEFINE_ERROR(NotAChainComplex)
LBO_DEFINE_ERROR(StrandMismatch)
LBO_DEFINE_ERROR(PartitionMismatch)
LBO_DEFINE_ERROR(InvalidPartition)
LBO_DEFINE_ERROR(NotClosed)
LBO_DEFINE_ERROR(UnknownFormat)
LBO_DEFINE_ERROR(GoldenFileMissing)

#undef LBO_DEFINE_ERROR

/// Raised by classify() when the predicates contradict a theorem; this can
/// only mean a bug in the predicates themselves.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lbo
