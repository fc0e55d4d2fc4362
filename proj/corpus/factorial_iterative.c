// n! for n >= 0, iterative.
int factorial(int n)
{
    int product = 1;
    while (n > 1) {
        product = product * n;
        n = n - 1;
    }
    return product;
}
