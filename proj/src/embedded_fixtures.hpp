#pragma once

#include <span>
#include <string_view>

namespace lcom::detail {

struct EmbeddedFile {
  std::string_view name;  // relative to fixtures/cases, e.g. "crm/Case1.json"
  std::string_view text;
};

std::span<const EmbeddedFile> embedded_fixtures();

}  // namespace lcom::detail
