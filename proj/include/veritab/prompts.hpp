#pragma once

// Prompt templates for the generation backend. The canonical texts live in
// assets/prompts/<role>.txt; identical built-in defaults keep the library
// usable without locating the asset directory, and a test pins the two in
// sync. Placeholders use {name} syntax and must all be bound at render time.

#include <map>
#include <string>

namespace veritab {

enum class PromptRole { Decompose, QuestionGen, QuestionAnswer, NatOpQuery };

std::string prompt_role_name(PromptRole role);

std::string default_prompt_template(PromptRole role);

// Substitutes every {placeholder}; an unbound placeholder throws
// std::invalid_argument. Rendering is byte-deterministic.
std::string render_prompt(const std::string& template_text,
                          const std::map<std::string, std::string>& fields);

}  // namespace veritab
