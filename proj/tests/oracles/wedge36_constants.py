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

# Quartic on wedge^3 k^6: normalization constant and star compatibility.
import itertools, sympy as sp
from sympy.combinatorics import Permutation
def perm_sign(seq):
    return Permutation([s for s in seq]).signature() if len(seq)>0 else 1
def sort_sign(idx):
    # sign of permutation sorting idx (distinct ints)
    s=1; a=list(idx)
    for i in range(len(a)):
        for j in range(i+1,len(a)):
            if a[i]>a[j]: s=-s
    return s
subs3=list(itertools.combinations(range(6),3))
def wedge_dict(v): return v  # dict frozenset-tuple -> coeff
def K(v):
    # v: dict sorted 3-tuple -> coeff; K: 6x6, col j = functional from (iota_{eps_j} v) ^ v
    M=sp.zeros(6,6)
    for j in range(6):
        # contraction iota_{eps_j}: e_{abc} -> sum over position
        c2={}
        for I,a in v.items():
            if j in I:
                pos=I.index(j); rest=tuple(x for x in I if x!=j)
                c2[rest]=c2.get(rest,0)+(-1)**pos*a
        # wedge c2 ^ v -> 5-forms
        c5={}
        for J,b in c2.items():
            for I,a in v.items():
                idx=J+I
                if len(set(idx))<5: continue
                key=tuple(sorted(idx)); c5[key]=c5.get(key,0)+sort_sign(idx)*a*b
        for key,val in c5.items():
            k=[x for x in range(6) if x not in key][0]
            M[k,j]+= (-1)**k*val
    return M
def tr2(v): 
    M=K(v); return sp.expand((M*M).trace())
v={(0,2,3):1,(1,4,5):1}
print("trace K^2 on e134+e256:",tr2(v))
v2={(0,1,2):1,(3,4,5):1}
print("trace K^2 on e123+e456:",tr2(v2))
# generic check of w-image formula with symbols
xs=sp.symbols('x1:7'); ys=sp.symbols('y1:7')
pairs=[(0,1),(0,2),(0,3),(1,2),(1,3),(2,3)]  # within V4
def pf(x): return x[0]*x[5]-x[1]*x[4]+x[2]*x[3]
t=sp.Symbol('t')
pxy=sp.expand(pf([a+t*b for a,b in zip(xs,ys)])).coeff(t,1)
rhs=sp.expand(pxy**2-4*pf(xs)*pf(ys))
vv={}
for (i,j),a in zip(pairs,xs): vv[(0,i+2,j+2)]=a
for (i,j),a in zip(pairs,ys): vv[(1,i+2,j+2)]=a
lhs=tr2(vv)
print("ratio:", sp.simplify(rhs/lhs) if lhs!=0 else None)
# Hodge star: *e_I = sgn(I,Ic) e_Ic
def star(v):
    out={}
    for I,a in v.items():
        Ic=tuple(x for x in range(6) if x not in I)
        out[Ic]=out.get(Ic,0)+sort_sign(I+Ic)*a
    return out
gen={I:sp.Symbol('v%d%d%d'%I) for I in subs3}
import random
random.seed(1)
num={I:random.randint(-5,5) for I in subs3}
a=tr2(num); b=tr2(star(num))
print("star phi:", sp.Rational(b,a))
