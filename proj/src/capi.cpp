#include "cybe/cybe.h"

#include <cstring>
#include <new>

#include "io.hpp"

struct cybe_document {
    cybe::Document doc;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** error_out, const std::string& msg) {
    if (error_out) *error_out = dup_string(msg);
}

}  // namespace

extern "C" {

const char* cybe_version(void) { return "0.1.0"; }

cybe_document* cybe_document_parse(const char* text, size_t len, char** error_out) {
    if (error_out) *error_out = nullptr;
    if (!text) {
        set_error(error_out, "null text");
        return nullptr;
    }
    try {
        std::string s(text, len == 0 ? std::strlen(text) : len);
        auto* d = new cybe_document{cybe::parse_document(s)};
        return d;
    } catch (const std::exception& ex) {
        set_error(error_out, ex.what());
        return nullptr;
    }
}

char* cybe_document_emit(const cybe_document* doc) {
    if (!doc) return nullptr;
    try {
        return dup_string(cybe::emit_document(doc->doc));
    } catch (const std::exception&) {
        return nullptr;
    }
}

const char* cybe_document_kind(const cybe_document* doc) {
    return doc ? doc->doc.kind.c_str() : nullptr;
}

void cybe_document_free(cybe_document* doc) { delete doc; }

cybe_status cybe_run_command(const char* command, const char* options_json,
                             const cybe_document* const* inputs, size_t n_inputs,
                             cybe_document** report_out, char** error_out) {
    if (error_out) *error_out = nullptr;
    if (report_out) *report_out = nullptr;
    if (!command) {
        set_error(error_out, "null command");
        return CYBE_INPUT_ERROR;
    }
    try {
        cybe::Json options = cybe::Json::object();
        if (options_json && *options_json) options = cybe::Json::parse(options_json);
        std::vector<cybe::Document> docs;
        for (size_t i = 0; i < n_inputs; ++i) {
            if (!inputs || !inputs[i]) {
                set_error(error_out, "null input document");
                return CYBE_INPUT_ERROR;
            }
            docs.push_back(inputs[i]->doc);
        }
        cybe::CommandResult res = cybe::run_command(command, options, docs);
        if (report_out) *report_out = new cybe_document{std::move(res.report)};
        switch (res.exit_code) {
            case 0: return CYBE_OK;
            case 1: return CYBE_FAIL;
            case 2: return CYBE_UNDETERMINED;
            default: return CYBE_INPUT_ERROR;
        }
    } catch (const std::exception& ex) {
        set_error(error_out, ex.what());
        return CYBE_INPUT_ERROR;
    }
}

void cybe_string_free(char* s) { std::free(s); }

}  // extern "C"
