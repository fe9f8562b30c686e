#!/usr/bin/env python3
# Independent re-implementation of std::mt19937_64 plus the Rng rejection
# sampler and Fisher-Yates shuffle, used to freeze the expected permutations
# in corpus_test.cc and language_test.cc.
M=(1<<64)-1
class MT64:
    def __init__(s, seed):
        s.mt=[0]*312; s.mt[0]=seed&M
        for i in range(1,312):
            s.mt[i]=(6364136223846793005*(s.mt[i-1]^(s.mt[i-1]>>62))+i)&M
        s.i=312
    def next(s):
        if s.i>=312:
            for k in range(312):
                x=(s.mt[k]&0xFFFFFFFF80000000)|(s.mt[(k+1)%312]&0x7FFFFFFF)
                xa=x>>1
                if x&1: xa^=0xB5026F5AA96619E9
                s.mt[k]=s.mt[(k+156)%312]^xa
            s.i=0
        y=s.mt[s.i]; s.i+=1
        y^=(y>>29)&0x5555555555555555
        y^=(y<<17)&0x71D67FFFEDA60000
        y^=(y<<37)&0xFFF7EEE000000000
        y^=y>>43
        return y&M
    def uniform(s,n):
        th=((1<<64)-n)%n
        while True:
            r=s.next()
            if r>=th: return r%n
print("first output, seed 0:", MT64(0).next())
r=MT64(0); items=list("abcde")
for i in range(len(items),1,-1):
    j=r.uniform(i); items[i-1],items[j]=items[j],items[i-1]
print("".join(items))
r=MT64(5489)
for _ in range(9999): r.next()
print("10000th", r.next())
