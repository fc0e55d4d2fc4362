// psgkit/parser.hpp - recursive-descent parser for the C-like subset
//
// translation-unit      := { function-definition | statement }
// function-definition   := type IDENT '(' parameter-list ')' block
// parameter-list        := [ type IDENT { ',' type IDENT } ]
// block                 := '{' { statement } '}'
// statement             := block | declaration | assignment | if | while
//                        | return | expression-statement
// declaration-statement := type IDENT [ '=' expression ] ';'
// assignment-statement  := IDENT '=' expression ';'
// if-statement          := 'if' '(' expression ')' statement [ 'else' statement ]
// while-statement       := 'while' '(' expression ')' statement
// return-statement      := 'return' [ expression ] ';'
// expression-statement  := expression ';'
//
// Binary precedence, loosest first: || && (== !=) (< > <= >=) (+ -) (* / %).
// Unary '-' and '!' bind tighter than any binary operator.
#pragma once

#include <string_view>
#include <vector>

#include "psgkit/lexer.hpp"
#include "psgkit/parse_tree.hpp"

namespace psgkit
{

/// Throws ParseError on a grammar violation.
ParseTree parse(const std::vector<Token> & tokens);

/// tokenize + parse.
ParseTree parse_source(std::string_view source);

}  // namespace psgkit
