#ifndef NOVBOTT_CORPUS_HPP
#define NOVBOTT_CORPUS_HPP

#include <string>
#include <vector>

namespace novbott {

// Built-in example documents, usable from the command line and from tests.
// Each entry is a complete JSON document in one of the supported formats.
const std::vector<std::string>& corpus_names();

// Throws invalid_input listing the valid names when `name` is unknown.
const std::string& corpus_document_text(const std::string& name);

}  // namespace novbott

#endif
