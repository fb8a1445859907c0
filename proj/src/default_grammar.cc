// Copyright 2026 The itnforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Built-in copy of data/grammar_en_us.lex. Keep the two in sync; the
// grammar tests compare them field by field.

#include "itn/grammar.h"

namespace itn {

const std::string& DefaultGrammarText() {
  static const std::string* kText = new std::string(R"lex(# English (US) lexicon for spoken/written text normalization.
#
# Format: "#" starts a comment. "schema_version" and "locale" come before
# the first section. "[section]" introduces a lexicon; key/value sections
# take "spoken = written" rows and list sections take one bare item per
# line. Extra files passed on top of this one extend the lexicons, and
# redefining an existing key anywhere is an error.

schema_version = 1
locale = en-US

[months]
january = 1
february = 2
march = 3
april = 4
may = 5
june = 6
july = 7
august = 8
september = 9
october = 10
november = 11
december = 12

[weekdays]
monday
tuesday
wednesday
thursday
friday
saturday
sunday

[currency]
dollars = $
dollar = $

[currency_minor]
cents
cent

# Spoken unit word -> written form. Words written as themselves (miles,
# degrees) still get listed so the tagger knows they are units.
[units]
kilometers = km
kilometer = km
kilograms = kg
kilogram = kg
meters = m
meter = m
grams = g
gram = g
pounds = lbs
pound = lb
miles = miles
mile = mile
inches = inches
inch = inch
feet = feet
foot = foot
degrees = degrees
degree = degree
seconds = seconds
minutes = minutes
hours = hours
hour = hour

[time_words]
noon = 12:00 pm
midnight = 12:00 am

[time_zones]
gmt
utc
est
edt
cst
cdt
mst
mdt
pst
pdt

[meridiem]
am = am
pm = pm
a m = am
p m = pm

# Phone digit templates: X is any digit, literal digits must match, "-"
# shows where separators appear in the written form. Deleting every
# pattern turns phone tagging off.
[phone]
XXX-XXX-XXXX
1-XXX-XXX-XXXX

[abbreviations]
dr. = doctor:next_capital, drive:prev_capital, doctor:next_word, drive:prev_word, doctor:default
mr. = mister:default
mrs. = missus:default
st. = saint:next_capital, street:prev_capital, street:prev_word, saint:default
ave. = avenue:default
)lex");
  return *kText;
}

}  // namespace itn
