#include <cstdio>
int main(){ std::puts("vqge placeholder"); return 1; }
