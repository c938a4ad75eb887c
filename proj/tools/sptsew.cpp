#include <cstdio>
int main(){printf("wip\n");}
