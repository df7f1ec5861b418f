# Copyright 2026 The prcodes Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Polynomial remainder codes with joint error-and-erasure decoding."""

from ._core import (
    CodeError,
    CodeSpec,
    DecodeOutcome,
    Field,
    FieldMismatch,
    Polynomial,
    Word,
    corrupt,
    decode,
    encode,
    is_irreducible,
    simulate,
)

__all__ = [
    "CodeError",
    "CodeSpec",
    "DecodeOutcome",
    "Field",
    "FieldMismatch",
    "Polynomial",
    "Word",
    "corrupt",
    "decode",
    "encode",
    "is_irreducible",
    "simulate",
]
