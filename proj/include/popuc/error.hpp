/*
   Copyright 2026 The popuc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POPUC_ERROR_HPP
#define POPUC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace popuc {

enum class ErrorKind {
    InvalidArgument,
    NonZeroRemainder,
    DuplicateFactor,
    EvenM,
    ZeroRoot,
    InadmissibleSeed,
    UnimodularA,
    NonVanishingConstant,
    EqualLastCoefficient,
    BadParam,
    IndexOutOfRange,
    DimensionMismatch,
    NonPositiveWeight,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonZeroRemainder: return "NonZeroRemainder";
    case ErrorKind::DuplicateFactor: return "DuplicateFactor";
    case ErrorKind::EvenM: return "EvenM";
    case ErrorKind::ZeroRoot: return "ZeroRoot";
    case ErrorKind::InadmissibleSeed: return "InadmissibleSeed";
    case ErrorKind::UnimodularA: return "UnimodularA";
    case ErrorKind::NonVanishingConstant: return "NonVanishingConstant";
    case ErrorKind::EqualLastCoefficient: return "EqualLastCoefficient";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace popuc

#endif // POPUC_ERROR_HPP
