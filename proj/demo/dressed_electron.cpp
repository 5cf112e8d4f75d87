#include <cstdio>
int main(){ std::puts("irscat demo placeholder"); }
