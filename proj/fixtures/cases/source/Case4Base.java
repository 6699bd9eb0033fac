// Case4 superclass: declares the protected a1
public class Case4Base {
    protected int a1;
}
