# Copyright 2026 The Preserver Authors
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

# Invertible maps of Symm_2(F_3) (coordinates a, b, c) fixing every rank-1 line.
import itertools

p = 3
vecs = [v for v in itertools.product(range(p), repeat=3) if any(v)]
rank1 = [v for v in vecs if (v[0] * v[2] - v[1] * v[1]) % p == 0]
lines = {tuple(x * v[i] % p for x in (1, 2) for i in range(3)) for v in rank1}
reps = [v for v in rank1 if next(x for x in v if x) == 1]


def det3(m):
    return (m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
            + m[2] * (m[3] * m[7] - m[4] * m[6])) % p


def image(m, v):
    return tuple(sum(m[3 * i + j] * v[j] for j in range(3)) % p for i in range(3))


invertible = 0
fixers = []
for m in itertools.product(range(p), repeat=9):
    if det3(m) == 0:
        continue
    invertible += 1
    if all(any(image(m, v) == tuple(l * x % p for x in v) for l in (1, 2)) for v in reps):
        fixers.append(m)
print("rank-1 lines", len(reps))
print("invertible", invertible)
print("fixers", len(fixers), fixers)
