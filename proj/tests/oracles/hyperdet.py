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

# Hyperdeterminant: det(X S X^t) ratio and factor-permutation invariance.
import sympy as sp, itertools
a={}
for i,j,k in itertools.product(range(2),repeat=3): a[(i,j,k)]=sp.Symbol('a%d%d%d'%(i,j,k))
A=lambda i,j,k:a[(i,j,k)]
H=(A(0,0,0)**2*A(1,1,1)**2+A(0,0,1)**2*A(1,1,0)**2+A(0,1,0)**2*A(1,0,1)**2+A(1,0,0)**2*A(0,1,1)**2
 -2*(A(0,0,0)*A(0,0,1)*A(1,1,0)*A(1,1,1)+A(0,0,0)*A(0,1,0)*A(1,0,1)*A(1,1,1)+A(0,0,0)*A(1,0,0)*A(0,1,1)*A(1,1,1)
     +A(0,0,1)*A(0,1,0)*A(1,0,1)*A(1,1,0)+A(0,0,1)*A(1,0,0)*A(0,1,1)*A(1,1,0)+A(0,1,0)*A(1,0,0)*A(0,1,1)*A(1,0,1))
 +4*(A(0,0,0)*A(0,1,1)*A(1,0,1)*A(1,1,0)+A(0,0,1)*A(0,1,0)*A(1,0,0)*A(1,1,1)))
X=sp.Matrix(2,4,lambda i,c: A(i,c//2,c%2))
S=sp.Matrix([[0,0,0,1],[0,0,-1,0],[0,-1,0,0],[1,0,0,0]])
D=sp.expand((X*S*X.T).det())
print("ratio det(XSX^t)/hyperdet:", sp.simplify(D/H))
# permutation invariance
for perm in itertools.permutations(range(3)):
    sub={a[idx]:a[tuple(idx[perm[p]] for p in range(3))] for idx in a}
    print(perm, sp.expand(H.xreplace(sub)-H)==0)
# e1e1e1+e2e2e2
print(H.subs({s:0 for s in a.values()}).subs({}) , H.xreplace({**{s:0 for s in a.values()}, a[(0,0,0)]:1, a[(1,1,1)]:1}))
